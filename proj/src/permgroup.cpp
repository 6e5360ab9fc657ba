#include "dtg/permgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace dtg {

// ---------------------------------------------------------------- chain

StabChain::StabChain(int degree, const std::vector<Perm>& gens, const std::vector<Point>& base_prefix,
                     std::optional<uint64_t> known_order, uint64_t seed)
    : n_(degree) {
  for (Point b : base_prefix) {
    if (b < 0 || b >= n_) throw Error("base point out of range");
    add_level(b);
  }
  std::vector<Perm> nontriv;
  for (const auto& g : gens) {
    if (g.degree() != n_) throw Error("generator degree mismatch");
    if (!g.is_identity()) nontriv.push_back(g);
  }
  for (const auto& g : nontriv) {
    auto [h, lvl] = sift(g);
    if (!h.is_identity()) add_strong(std::move(h));
  }
  if (nontriv.empty()) return;

  RandomElements rnd(n_, nontriv, seed);
  // consecutive sifts to the identity before we trust the random phase
  const int quiet_needed = known_order ? 400 : 40;
  int quiet = 0;
  while (true) {
    if (known_order) {
      uint64_t o = order();
      if (o == *known_order) return;
      if (o > *known_order)
        throw Error("stabilizer chain order " + std::to_string(o) + " incompatible with known order " +
                    std::to_string(*known_order));
    }
    if (quiet >= quiet_needed) break;
    auto [h, lvl] = sift(rnd.next());
    if (h.is_identity()) {
      ++quiet;
    } else {
      add_strong(std::move(h));
      quiet = 0;
    }
  }
  while (!verify()) {
  }
  if (known_order && order() != *known_order)
    throw Error("group order " + std::to_string(order()) + " differs from claimed " + std::to_string(*known_order));
}

void StabChain::add_level(Point b) {
  Level L;
  L.base = b;
  L.tree.assign(n_, -1);
  L.tree[b] = -2;
  L.orbit.push_back(b);
  levels_.push_back(std::move(L));
}

void StabChain::add_strong(Perm g) {
  size_t d = 0;
  while (d < levels_.size() && g[levels_[d].base] == levels_[d].base) ++d;
  if (d == levels_.size()) add_level(g.first_moved());
  int idx = static_cast<int>(strong_.size());
  strong_inv_.push_back(g.inverse());
  strong_.push_back(std::move(g));
  depth_.push_back(d);
  for (size_t i = 0; i <= d; ++i) {
    levels_[i].gens.push_back(idx);
    extend_orbit(i, idx);
  }
}

void StabChain::extend_orbit(size_t level, int gen) {
  Level& L = levels_[level];
  const Perm& s = strong_[gen];
  size_t old = L.orbit.size();
  for (size_t k = 0; k < old; ++k) {
    Point q = s[L.orbit[k]];
    if (L.tree[q] == -1) {
      L.tree[q] = gen;
      L.orbit.push_back(q);
    }
  }
  for (size_t k = old; k < L.orbit.size(); ++k) {
    Point p = L.orbit[k];
    for (int j : L.gens) {
      Point q = strong_[j][p];
      if (L.tree[q] == -1) {
        L.tree[q] = j;
        L.orbit.push_back(q);
      }
    }
  }
}

uint64_t StabChain::order() const {
  uint64_t o = 1;
  for (const auto& L : levels_) o = mul_checked(o, L.orbit.size());
  return o;
}

std::vector<Point> StabChain::base() const {
  std::vector<Point> b;
  for (const auto& L : levels_) b.push_back(L.base);
  return b;
}

std::pair<Perm, size_t> StabChain::sift(Perm g) const {
  for (size_t i = 0; i < levels_.size(); ++i) {
    const Level& L = levels_[i];
    Point p = g[L.base];
    if (L.tree[p] == -1) return {std::move(g), i};
    while (p != L.base) {
      int j = L.tree[p];
      g.rmul(strong_inv_[j]);
      p = strong_inv_[j][p];
    }
  }
  return {std::move(g), levels_.size()};
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != n_) throw Error("degree mismatch in membership test");
  return sift(g).first.is_identity();
}

Perm StabChain::transversal(size_t level, Point p) const {
  const Level& L = levels_[level];
  if (L.tree[p] == -1) throw Error("point not in basic orbit");
  std::vector<int> path;
  for (Point q = p; L.tree[q] != -2;) {
    int j = L.tree[q];
    path.push_back(j);
    q = strong_inv_[j][q];
  }
  Perm u(n_);
  for (auto it = path.rbegin(); it != path.rend(); ++it) u.rmul(strong_[*it]);
  return u;
}

std::vector<Perm> StabChain::level_generators(size_t level) const {
  std::vector<Perm> out;
  if (level >= levels_.size()) return out;
  for (int j : levels_[level].gens) out.push_back(strong_[j]);
  return out;
}

bool StabChain::verify() {
  for (size_t i = levels_.size(); i-- > 0;) {
    // copy: add_strong may grow the level while we scan it
    std::vector<Point> orb = levels_[i].orbit;
    std::vector<int> gens = levels_[i].gens;
    for (Point p : orb) {
      Perm up = transversal(i, p);
      for (int j : gens) {
        Point q = strong_[j][p];
        Perm g = up * strong_[j];
        g.rmul(transversal(i, q).inverse());
        auto [h, lvl] = sift(std::move(g));
        if (!h.is_identity()) {
          add_strong(std::move(h));
          return false;
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------- random elements

RandomElements::RandomElements(int degree, const std::vector<Perm>& gens, uint64_t seed)
    : acc_(degree), rng_(seed) {
  for (const auto& g : gens)
    if (!g.is_identity()) pool_.push_back(g);
  if (pool_.empty()) return;
  size_t k = pool_.size();
  while (pool_.size() < 10) pool_.push_back(pool_[pool_.size() % k]);
  for (int i = 0; i < 60; ++i) next();
}

Perm RandomElements::next() {
  if (pool_.empty()) return acc_;
  std::uniform_int_distribution<size_t> pick(0, pool_.size() - 1);
  size_t i = pick(rng_), j = pick(rng_);
  while (j == i) j = pick(rng_);
  if (rng_() & 1)
    pool_[i] = pool_[i] * pool_[j];
  else
    pool_[i] = pool_[i] * pool_[j].inverse();
  acc_ = acc_ * pool_[i];
  return acc_;
}

// ---------------------------------------------------------------- groups

PermGroup::PermGroup(int degree, std::vector<Perm> gens, std::optional<uint64_t> known_order)
    : n_(degree), gens_(std::move(gens)), known_(known_order) {
  if (degree <= 0) throw Error("group degree must be positive");
  for (const auto& g : gens_)
    if (g.degree() != n_) throw Error("generator degree mismatch");
}

PermGroup PermGroup::symmetric(int n) {
  std::vector<Perm> g;
  if (n >= 2) {
    g.push_back(Perm::from_cycles(n, {{0, 1}}));
    std::vector<Point> c(n);
    std::iota(c.begin(), c.end(), 0);
    if (n > 2) g.push_back(Perm::from_cycles(n, {c}));
  }
  return PermGroup(n, g);
}

PermGroup PermGroup::alternating(int n) {
  std::vector<Perm> g;
  for (int i = 2; i < n; ++i) g.push_back(Perm::from_cycles(n, {{0, 1, i}}));
  return PermGroup(n, g);
}

const StabChain& PermGroup::chain() const {
  std::call_once(lazy_->once, [this] {
    lazy_->chain = std::make_unique<StabChain>(n_, gens_, std::vector<Point>{}, known_, default_seed());
  });
  return *lazy_->chain;
}

StabChain PermGroup::chain_with_base(const std::vector<Point>& prefix) const {
  return StabChain(n_, gens_, prefix, order(), default_seed());
}

PermGroup PermGroup::stabilizer(const std::vector<Point>& pts) const {
  StabChain c = chain_with_base(pts);
  uint64_t o = 1;
  for (size_t i = pts.size(); i < c.levels().size(); ++i) o = mul_checked(o, c.levels()[i].orbit.size());
  return PermGroup(n_, c.level_generators(pts.size()), o);
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != n_) throw Error("degree mismatch in membership test");
  return chain().contains(g);
}

std::vector<Point> orbit_of(int degree, const std::vector<Perm>& gens, Point p) {
  if (p < 0 || p >= degree) throw Error("point out of range");
  std::vector<char> seen(degree, 0);
  std::vector<Point> orb{p};
  seen[p] = 1;
  for (size_t k = 0; k < orb.size(); ++k)
    for (const auto& g : gens) {
      Point q = g[orb[k]];
      if (!seen[q]) {
        seen[q] = 1;
        orb.push_back(q);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<Point> PermGroup::orbit(Point p) const { return orbit_of(n_, gens_, p); }

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<std::vector<Point>> out;
  std::vector<char> seen(n_, 0);
  for (Point p = 0; p < n_; ++p) {
    if (seen[p]) continue;
    auto o = orbit(p);
    for (Point q : o) seen[q] = 1;
    out.push_back(std::move(o));
  }
  return out;
}

bool PermGroup::is_transitive() const { return static_cast<int>(orbit(0).size()) == n_; }

// ---------------------------------------------------------------- cosets

ActionTable coset_action(const PermGroup& g, const PermGroup& sub, size_t max_index) {
  if (sub.degree() != g.degree()) throw Error("degree mismatch between group and subgroup");
  for (const auto& s : sub.generators())
    if (!g.contains(s)) throw Error("not a subgroup");
  uint64_t go = g.order(), ho = sub.order();
  if (go % ho != 0) throw Error("not a subgroup");
  uint64_t index = go / ho;
  if (index > max_index) throw Error("index too large: " + std::to_string(index));

  const StabChain& hc = sub.chain();
  int n = g.degree();
  // smallest element of Hx in the order given by images of H's base, level by level
  auto canon = [&](Perm x) {
    for (size_t i = 0; i < hc.levels().size(); ++i) {
      const auto& L = hc.levels()[i];
      Point best = L.orbit[0];
      for (Point q : L.orbit)
        if (x[q] < x[best]) best = q;
      if (best != L.base) x = hc.transversal(i, best) * x;
    }
    return x;
  };

  ActionTable t;
  std::unordered_map<std::vector<Point>, int, PermHash> idx;
  t.reps.push_back(canon(Perm(n)));
  idx.emplace(t.reps[0].images(), 0);
  std::vector<std::vector<Point>> img(g.generators().size());
  for (size_t k = 0; k < t.reps.size(); ++k) {
    for (size_t s = 0; s < g.generators().size(); ++s) {
      Perm y = canon(t.reps[k] * g.generators()[s]);
      auto it = idx.find(y.images());
      int j;
      if (it == idx.end()) {
        j = static_cast<int>(t.reps.size());
        if (static_cast<uint64_t>(j) >= index) throw Error("coset enumeration exceeded |G:H|");
        idx.emplace(y.images(), j);
        t.reps.push_back(std::move(y));
      } else {
        j = it->second;
      }
      img[s].push_back(j);
    }
  }
  if (t.reps.size() != index) throw Error("coset enumeration found " + std::to_string(t.reps.size()) +
                                          " cosets, expected " + std::to_string(index));
  t.m = static_cast<int>(index);
  for (auto& v : img) t.gens.emplace_back(std::move(v));
  return t;
}

// ---------------------------------------------------------------- orbitals

std::vector<Suborbit> orbitals(const PermGroup& g, Point base) {
  if (!g.is_transitive()) throw Error("intransitive");
  int n = g.degree();
  StabChain c = g.chain_with_base({base});
  std::vector<Perm> sg = c.level_generators(1);
  std::vector<int> which(n, -1);
  std::vector<Suborbit> out;
  Suborbit triv;
  triv.points = {base};
  out.push_back(triv);
  which[base] = 0;
  for (Point p = 0; p < n; ++p) {
    if (which[p] != -1) continue;
    Suborbit s;
    s.points = orbit_of(n, sg, p);
    for (Point q : s.points) which[q] = static_cast<int>(out.size());
    out.push_back(std::move(s));
  }
  for (size_t i = 0; i < out.size(); ++i) {
    out[i].index = static_cast<int>(i);
    Point beta = out[i].points[0];
    Perm u = c.transversal(0, beta);
    out[i].paired = which[u.inverse()[base]];
  }
  return out;
}

std::vector<uint64_t> subdegrees(const std::vector<Suborbit>& s) {
  std::vector<uint64_t> d;
  for (const auto& x : s) d.push_back(x.points.size());
  return d;
}

namespace {
struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
};
}  // namespace

std::vector<std::vector<std::vector<Point>>> block_systems(const PermGroup& g) {
  if (!g.is_transitive()) throw Error("intransitive");
  int n = g.degree();
  auto subs = orbitals(g, 0);
  std::vector<std::vector<std::vector<Point>>> found;
  std::vector<std::vector<Point>> block0;
  for (size_t i = 1; i < subs.size(); ++i) {
    UnionFind uf(n);
    std::vector<std::pair<int, int>> queue{{0, subs[i].points[0]}};
    uf.p[uf.find(subs[i].points[0])] = uf.find(0);
    for (size_t k = 0; k < queue.size(); ++k) {
      auto [x, y] = queue[k];
      for (const auto& s : g.generators()) {
        int a = uf.find(s[x]), b = uf.find(s[y]);
        if (a != b) {
          uf.p[b] = a;
          queue.emplace_back(a, b);
        }
      }
    }
    std::vector<std::vector<Point>> classes(n);
    for (Point p = 0; p < n; ++p) classes[uf.find(p)].push_back(p);
    std::vector<std::vector<Point>> part;
    for (auto& c : classes)
      if (!c.empty()) part.push_back(std::move(c));
    if (part.size() == 1) continue;
    std::sort(part.begin(), part.end());
    if (std::find(found.begin(), found.end(), part) != found.end()) continue;
    block0.push_back(part[0]);
    found.push_back(std::move(part));
  }
  std::vector<std::vector<std::vector<Point>>> minimal;
  for (size_t i = 0; i < found.size(); ++i) {
    bool min = true;
    for (size_t j = 0; j < found.size() && min; ++j) {
      if (i == j || block0[j].size() >= block0[i].size()) continue;
      if (std::includes(block0[i].begin(), block0[i].end(), block0[j].begin(), block0[j].end())) min = false;
    }
    if (min) minimal.push_back(found[i]);
  }
  std::sort(minimal.begin(), minimal.end(), [](const auto& a, const auto& b) {
    if (a[0].size() != b[0].size()) return a[0].size() < b[0].size();
    return a < b;
  });
  return minimal;
}

std::string factor_string(uint64_t n) {
  if (n == 1) return "1";
  std::string s;
  for (uint64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) {
      if (!s.empty()) s += "\u00b7";
      s += std::to_string(p);
      if (e > 1) s += "^" + std::to_string(e);
    }
  }
  if (n > 1) {
    if (!s.empty()) s += "\u00b7";
    s += std::to_string(n);
  }
  return s;
}

}  // namespace dtg
