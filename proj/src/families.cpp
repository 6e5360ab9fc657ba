#include "dtg/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "dtg/error.hpp"
#include "dtg/field.hpp"
#include "dtg/formed_space.hpp"
#include "dtg/formulas.hpp"
#include "dtg/golay.hpp"
#include "dtg/transitivity.hpp"

namespace dtg {

int64_t FamilySpec::get(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw Error("family " + family + " needs parameter " + key);
  return it->second;
}

int64_t FamilySpec::get(const std::string& key, int64_t fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

FamilySpec parse_family(const std::string& family, const std::string& params) {
  FamilySpec s;
  s.family = family;
  s.params = parse_params(params);
  return s;
}

namespace {

struct FamilyInfo {
  const char* name;
  const char* usage;
};

const FamilyInfo kFamilies[] = {
    {"cycle", "n>=3"},
    {"path", "n>=1"},
    {"complete", "n>=1"},
    {"complete-multipartite", "m>=2 parts, b>=1 vertices per part"},
    {"hamming", "d>=1, n>=2"},
    {"johnson", "n, k with 1<=k<n"},
    {"odd", "k>=1 (k-subsets of a (2k+1)-set, adjacent when disjoint)"},
    {"petersen", "(none)"},
    {"cube", "d>=1"},
    {"pg-incidence", "dim>=2, q prime power (points vs hyperplanes)"},
    {"dual-polar", "q prime power (totally isotropic 3-spaces of Sp(6,q))"},
    {"grassmann", "n, q, k (k-subspaces of GF(q)^n, adjacent when meeting in k-1)"},
    {"hoffman-singleton", "(none)"},
    {"g42", "(none)"},
    {"sylvester", "(none)"},
    {"perkel", "(none; seed from DTG_SEED)"},
    {"frames63", "(none; seed from DTG_SEED)"},
    {"unitary", "n, q in {3,4}, delta in {1,2,3}"},
    {"orthogonal", "n, q in {4,5}, sign=+/- for even n, delta in {1,2,3}"},
    {"golay-c12", "(none)"},
    {"golay-c22", "(none)"},
    {"golay-c23", "(none)"},
    {"m23", "(none)"},
};

void cap(uint64_t nv) {
  if (nv > kMaxFamilyVertices)
    throw Error("unsupported parameters: " + std::to_string(nv) + " vertices exceeds the cap of " +
                std::to_string(kMaxFamilyVertices));
}

void need(bool ok, const std::string& what) {
  if (!ok) throw Error("unsupported parameters: " + what);
}

uint64_t ipow(uint64_t b, int e) {
  uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    r *= b;
    if (r > 1'000'000'000ULL) return r;
  }
  return r;
}

uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > 1'000'000'000ULL) return r;
  }
  return r;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(k);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

std::string set_label(const std::vector<int>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
  return out + "}";
}

// Sym(n) acting on k-subsets, with subsets indexed as in k_subsets
std::vector<Perm> induced_on_subsets(const std::vector<std::vector<int>>& sets, int n) {
  std::map<std::vector<int>, int> idx;
  for (size_t i = 0; i < sets.size(); ++i) idx[sets[i]] = static_cast<int>(i);
  std::vector<Perm> base{Perm::from_cycles(n, {{0, 1}})};
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 0);
  base.push_back(Perm::from_cycles(n, {cyc}));
  std::vector<Perm> out;
  for (const auto& g : base) {
    std::vector<Point> img(sets.size());
    for (size_t i = 0; i < sets.size(); ++i) {
      std::vector<int> t;
      for (int x : sets[i]) t.push_back(g[x]);
      std::sort(t.begin(), t.end());
      img[i] = idx.at(t);
    }
    out.emplace_back(img);
  }
  return out;
}

Perm power(const Perm& g, uint64_t e) {
  Perm r(g.degree()), b = g;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

// projective points of PG(d,q): first nonzero coordinate 1
std::vector<Vec> projective_points(const Field& F, int len) {
  std::vector<Vec> out;
  int q = F.q();
  for (int lead = 0; lead < len; ++lead) {
    int tail = len - lead - 1;
    uint64_t cnt = ipow(q, tail);
    for (uint64_t c = 0; c < cnt; ++c) {
      Vec v(len, 0);
      v[lead] = 1;
      uint64_t x = c;
      for (int i = len - 1; i > lead; --i) {
        v[i] = static_cast<int>(x % q);
        x /= q;
      }
      out.push_back(v);
    }
  }
  return out;
}

Vec normalize_proj(const Field& F, Vec v) {
  for (int x : v)
    if (x) {
      int inv = F.inv(x);
      for (auto& y : v) y = F.mul(y, inv);
      return v;
    }
  throw Error("zero vector has no projective point");
}

std::string vec_label(const Field& F, const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + (F.f() > 1 ? F.power_str(v[i]) : std::to_string(v[i]));
  return s + ")";
}

// elementary transvections I + a E_ij over the prime-field generator a = 1 and a primitive a
std::vector<Mat> transvections(const Field& F, int n) {
  std::vector<Mat> out;
  std::vector<int> scalars{1};
  if (F.q() > 2 && F.primitive() != 1) scalars.push_back(F.primitive());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int a : scalars) {
        Mat m(n, Vec(n, 0));
        for (int t = 0; t < n; ++t) m[t][t] = 1;
        m[i][j] = a;
        out.push_back(m);
      }
    }
  return out;
}

Vec row_times(const Field& F, const Vec& x, const Mat& m) {
  size_t n = x.size();
  Vec y(n, 0);
  for (size_t i = 0; i < n; ++i) {
    if (!x[i]) continue;
    for (size_t j = 0; j < n; ++j)
      if (m[i][j]) y[j] = F.add(y[j], F.mul(x[i], m[i][j]));
  }
  return y;
}

PermGroup graph_group(const Graph& g, std::vector<Perm> gens) {
  for (const auto& p : gens)
    if (p.degree() != g.n()) throw Error("internal: group degree mismatch");
  return PermGroup(g.n(), std::move(gens));
}

}  // namespace

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto& f : kFamilies) out.push_back(f.name);
  return out;
}

std::string family_usage(const std::string& family) {
  for (const auto& f : kFamilies)
    if (family == f.name) return f.usage;
  throw Error("unknown family '" + family + "'");
}

Graph cycle_graph(int n) {
  need(n >= 3, "cycle needs n >= 3");
  cap(n);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph path_graph(int n) {
  need(n >= 1, "path needs n >= 1");
  cap(n);
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph complete_graph(int n) {
  need(n >= 1, "complete needs n >= 1");
  cap(n);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

// vertex i lies in part i / b
Graph complete_multipartite(int m, int b) {
  need(m >= 2 && b >= 1, "complete-multipartite needs m >= 2, b >= 1");
  cap(static_cast<uint64_t>(m) * b);
  int n = m * b;
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (i / b != j / b) e.emplace_back(i, j);
  return Graph(n, e);
}

// words over {0..n-1}, index = sum w_i n^i
Graph hamming_graph(int d, int n) {
  need(d >= 1 && n >= 2, "hamming needs d >= 1, n >= 2");
  uint64_t nv = ipow(n, d);
  cap(nv);
  std::vector<Edge> e;
  std::vector<std::string> lab;
  for (uint64_t x = 0; x < nv; ++x) {
    uint64_t pw = 1;
    std::string s;
    for (int i = 0; i < d; ++i) {
      int c = static_cast<int>(x / pw % n);
      s += std::to_string(c) + (i + 1 < d && n > 10 ? "," : "");
      for (int a = c + 1; a < n; ++a) e.emplace_back(static_cast<int>(x), static_cast<int>(x + (a - c) * pw));
      pw *= n;
    }
    lab.push_back(s);
  }
  Graph g(static_cast<int>(nv), e);
  g.labels = lab;
  return g;
}

Graph johnson_graph(int n, int k) {
  need(k >= 1 && k < n, "johnson needs 1 <= k < n");
  cap(binom(n, k));
  auto sets = k_subsets(n, k);
  std::vector<Edge> e;
  for (size_t i = 0; i < sets.size(); ++i)
    for (size_t j = i + 1; j < sets.size(); ++j) {
      std::vector<int> common;
      std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                            std::back_inserter(common));
      if (static_cast<int>(common.size()) == k - 1) e.emplace_back(i, j);
    }
  Graph g(static_cast<int>(sets.size()), e);
  for (const auto& s : sets) g.labels.push_back(set_label(s));
  return g;
}

Graph odd_graph(int k) {
  need(k >= 1, "odd needs k >= 1");
  int n = 2 * k + 1;
  cap(binom(n, k));
  auto sets = k_subsets(n, k);
  std::vector<uint32_t> mask;
  for (const auto& s : sets) {
    uint32_t m = 0;
    for (int x : s) m |= 1u << x;
    mask.push_back(m);
  }
  std::vector<Edge> e;
  for (size_t i = 0; i < sets.size(); ++i)
    for (size_t j = i + 1; j < sets.size(); ++j)
      if (!(mask[i] & mask[j])) e.emplace_back(i, j);
  Graph g(static_cast<int>(sets.size()), e);
  for (const auto& s : sets) g.labels.push_back(set_label(s));
  return g;
}

// points 0..N-1, hyperplanes N..2N-1 (hyperplane i has the same coordinate vector as point i)
Graph pg_incidence(int dim, int q) {
  need(dim >= 2, "pg-incidence needs dim >= 2");
  need(is_prime_power(q) && q <= 256, "q must be a prime power <= 256");
  uint64_t npts = (ipow(q, dim + 1) - 1) / (q - 1);
  cap(2 * npts);
  const Field& F = Field::get(q);
  auto pts = projective_points(F, dim + 1);
  int N = static_cast<int>(pts.size());
  std::vector<Edge> e;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      int dot = 0;
      for (int t = 0; t <= dim; ++t) dot = F.add(dot, F.mul(pts[i][t], pts[j][t]));
      if (dot == 0) e.emplace_back(i, N + j);
    }
  Graph g(2 * N, e);
  for (const auto& p : pts) g.labels.push_back("p" + vec_label(F, p));
  for (const auto& p : pts) g.labels.push_back("H" + vec_label(F, p));
  return g;
}

// P_h (vertex 5h+j) pentagons, Q_i (25+5i+k) pentagrams; P_h j ~ Q_i (h*i+j)
Graph hoffman_singleton() {
  std::vector<Edge> e;
  for (int h = 0; h < 5; ++h)
    for (int j = 0; j < 5; ++j) {
      e.emplace_back(5 * h + j, 5 * h + (j + 1) % 5);
      e.emplace_back(25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5);
      for (int i = 0; i < 5; ++i) e.emplace_back(5 * h + j, 25 + 5 * i + (h * i + j) % 5);
    }
  Graph g(50, e);
  for (int h = 0; h < 5; ++h)
    for (int j = 0; j < 5; ++j) g.labels.push_back("P" + std::to_string(h) + "." + std::to_string(j));
  for (int i = 0; i < 5; ++i)
    for (int k = 0; k < 5; ++k) g.labels.push_back("Q" + std::to_string(i) + "." + std::to_string(k));
  return g;
}

namespace {

Graph delete_vertices(const Graph& g, const std::set<Vertex>& drop) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.n(); ++v)
    if (!drop.count(v)) keep.push_back(v);
  Graph h = induced_subgraph(g, keep);
  if (h.labels.empty() && !g.labels.empty())
    for (Vertex v : keep) h.labels.push_back(g.labels[v]);
  return h;
}

}  // namespace

Graph g42_graph() {
  Graph hs = hoffman_singleton();
  std::set<Vertex> drop{0};
  for (Vertex w : hs.neighbors(0)) drop.insert(w);
  return delete_vertices(hs, drop);
}

Graph sylvester_graph() {
  Graph hs = hoffman_singleton();
  Vertex u = 0, v = hs.neighbors(0).front();
  std::set<Vertex> drop{u, v};
  for (Vertex w : hs.neighbors(u)) drop.insert(w);
  for (Vertex w : hs.neighbors(v)) drop.insert(w);
  return delete_vertices(hs, drop);
}

Graph cayley_perm(int degree, const std::vector<Perm>& gens, const std::vector<Perm>& S) {
  for (const auto& g : gens)
    if (g.degree() != degree) throw Error("generator degree mismatch");
  std::unordered_map<Perm, int, PermHash> idx;
  std::vector<Perm> elts{Perm(degree)};
  idx.emplace(elts[0], 0);
  for (size_t i = 0; i < elts.size(); ++i)
    for (const auto& g : gens) {
      Perm h = elts[i] * g;
      if (!idx.count(h)) {
        cap(elts.size() + 1);
        idx.emplace(h, static_cast<int>(elts.size()));
        elts.push_back(h);
      }
    }
  std::set<int> sidx;
  for (const auto& s : S) {
    if (s.degree() != degree) throw Error("connection-set element degree mismatch");
    if (s.is_identity()) throw Error("connection set contains the identity");
    auto it = idx.find(s);
    if (it == idx.end()) throw Error("connection-set element " + s.cycle_string() + " is not in the group");
    sidx.insert(it->second);
  }
  for (int s : sidx)
    if (!sidx.count(idx.at(elts[s].inverse()))) throw Error("connection set not inverse-closed");
  int n = static_cast<int>(elts.size());
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int s : sidx) {
      int v = idx.at(elts[s] * elts[u]);
      if (u < v) e.emplace_back(u, v);
    }
  Graph g(n, e);
  if (!is_connected(g)) throw Error("connection set does not generate the group");
  for (const auto& x : elts) g.labels.push_back(x.is_identity() ? "()" : x.cycle_string());
  return g;
}

PerkelBuild perkel_graph(uint64_t seed, int budget) {
  // PSL(2,19) on the projective line; point 19 is infinity
  const int p = 19, inf = 19;
  auto mobius = [&](auto f) {
    std::vector<Point> img(20);
    for (int z = 0; z <= 19; ++z) img[z] = f(z);
    return Perm(img);
  };
  auto inv19 = [&](int z) {
    for (int y = 1; y < p; ++y)
      if (z * y % p == 1) return y;
    return -1;
  };
  Perm t = mobius([&](int z) { return z == inf ? inf : (z + 1) % p; });
  Perm m = mobius([&](int z) { return z == inf ? inf : 4 * z % p; });
  Perm w = mobius([&](int z) { return z == inf ? 0 : z == 0 ? inf : (p - inv19(z)) % p; });
  PermGroup psl(20, {t, m, w});
  if (psl.order() != 3420) throw Error("internal: PSL(2,19) order " + std::to_string(psl.order()));

  RandomElements rnd(20, psl.generators(), seed);
  PerkelBuild out;
  out.seed = seed;
  std::optional<PermGroup> a5;
  for (int att = 1; att <= budget && !a5; ++att) {
    out.attempts = att;
    Perm x = rnd.next(), y = rnd.next();
    uint64_t ox = x.order(), oy = y.order();
    if (ox % 2 || oy % 3) continue;
    Perm a = power(x, ox / 2), b = power(y, oy / 3);
    if ((a * b).order() != 5) continue;
    PermGroup h(20, {a, b});
    if (h.order() == 60) a5 = h;
  }
  if (!a5) throw Error("no A5 found in PSL(2,19) within " + std::to_string(budget) + " attempts");
  ActionTable act = coset_action(psl, *a5);
  PermGroup g = act.group(3420);
  auto orb = orbitals(g, 0);
  int rep = -1;
  for (const auto& s : orb)
    if (s.index > 0 && s.points.size() == 6) rep = s.points.front();
  if (rep < 0) throw Error("internal: no suborbit of size 6 in the coset action");
  out.built.graph = orbital_graph(g, rep, 0);
  for (int i = 0; i < act.m; ++i) out.built.graph.labels.push_back("A5*g" + std::to_string(i));
  out.built.group = g;
  out.built.note = "A5 found after " + std::to_string(out.attempts) + " attempts (seed " + std::to_string(seed) + ")";
  return out;
}

Built frames63_graph(uint64_t seed) {
  auto s = FormedSpace::unitary(3, 3);
  auto pts = enumerate_points(s);
  int np = static_cast<int>(pts.points.size());
  std::vector<std::array<int, 3>> frames;
  std::map<std::array<int, 3>, int> fidx;
  for (int i = 0; i < np; ++i)
    for (int j = i + 1; j < np; ++j) {
      if (s.beta(pts.points[i], pts.points[j])) continue;
      for (int k = j + 1; k < np; ++k)
        if (!s.beta(pts.points[i], pts.points[k]) && !s.beta(pts.points[j], pts.points[k])) {
          fidx[{i, j, k}] = static_cast<int>(frames.size());
          frames.push_back({i, j, k});
        }
    }
  ActionTable pa = point_action(s, pts, isometry_generators(s, seed));
  std::vector<Perm> fg;
  for (const auto& g : pa.gens) {
    std::vector<Point> img(frames.size());
    for (size_t f = 0; f < frames.size(); ++f) {
      std::array<int, 3> t{g[frames[f][0]], g[frames[f][1]], g[frames[f][2]]};
      std::sort(t.begin(), t.end());
      img[f] = fidx.at(t);
    }
    fg.emplace_back(img);
  }
  PermGroup grp(static_cast<int>(frames.size()), fg);
  if (!grp.is_transitive()) throw Error("internal: frame action is not transitive");
  auto orb = orbitals(grp, 0);
  int rep = -1, count6 = 0;
  for (const auto& o : orb)
    if (o.index > 0 && o.points.size() == 6) {
      if (rep < 0) rep = o.points.front();
      ++count6;
    }
  if (rep < 0) throw Error("internal: no suborbit of size 6 on frames");
  Built b;
  b.graph = orbital_graph(grp, rep, 0);
  for (const auto& f : frames)
    b.graph.labels.push_back("{" + s.vector_str(pts.points[f[0]]) + ";" + s.vector_str(pts.points[f[1]]) + ";" +
                             s.vector_str(pts.points[f[2]]) + "}");
  b.group = grp;
  std::ostringstream note;
  note << frames.size() << " frames, group order " << grp.order() << ", subdegrees";
  for (auto d : subdegrees(orb)) note << " " << d;
  if (count6 > 1) note << " (first of " << count6 << " suborbits of size 6)";
  b.note = note.str();
  return b;
}

Built build_family(const FamilySpec& spec) {
  const std::string& f = spec.family;
  Built b;
  auto I = [&](const std::string& k) { return static_cast<int>(spec.get(k)); };
  if (f == "cycle") {
    int n = I("n");
    b.graph = cycle_graph(n);
    std::vector<Point> rot(n), ref(n);
    for (int i = 0; i < n; ++i) {
      rot[i] = (i + 1) % n;
      ref[i] = (n - i) % n;
    }
    b.group = graph_group(b.graph, {Perm(rot), Perm(ref)});
  } else if (f == "path") {
    b.graph = path_graph(I("n"));
  } else if (f == "complete") {
    int n = I("n");
    b.graph = complete_graph(n);
    b.group = PermGroup::symmetric(n);
  } else if (f == "complete-multipartite") {
    int m = I("m"), bb = I("b");
    b.graph = complete_multipartite(m, bb);
    int n = m * bb;
    std::vector<Perm> gens;
    std::vector<Point> within(n), shift(n);
    for (int i = 0; i < n; ++i) {
      within[i] = i / bb == 0 ? (i + 1) % bb : i;
      shift[i] = (i + bb) % n;
    }
    gens.emplace_back(within);
    gens.emplace_back(shift);
    b.group = graph_group(b.graph, gens);
  } else if (f == "hamming" || f == "cube") {
    int d = I("d"), n = f == "cube" ? 2 : I("n");
    b.graph = hamming_graph(d, n);
    int nv = b.graph.n();
    std::vector<Perm> gens;
    // shift in coordinate 0, and the cyclic coordinate rotation
    std::vector<Point> sh(nv), rot(nv);
    for (int x = 0; x < nv; ++x) {
      int c0 = x % n;
      sh[x] = x - c0 + (c0 + 1) % n;
      int rest = x / n;
      rot[x] = rest + c0 * static_cast<int>(ipow(n, d - 1));
    }
    gens.emplace_back(sh);
    gens.emplace_back(rot);
    b.group = graph_group(b.graph, gens);
  } else if (f == "johnson") {
    int n = I("n"), k = I("k");
    b.graph = johnson_graph(n, k);
    b.group = graph_group(b.graph, induced_on_subsets(k_subsets(n, k), n));
  } else if (f == "odd") {
    int k = I("k");
    b.graph = odd_graph(k);
    b.group = graph_group(b.graph, induced_on_subsets(k_subsets(2 * k + 1, k), 2 * k + 1));
  } else if (f == "petersen") {
    b.graph = odd_graph(2);
    b.group = graph_group(b.graph, induced_on_subsets(k_subsets(5, 2), 5));
  } else if (f == "pg-incidence") {
    int dim = I("dim"), q = I("q");
    b.graph = pg_incidence(dim, q);
    const Field& F = Field::get(q);
    auto pts = projective_points(F, dim + 1);
    int N = static_cast<int>(pts.size());
    std::map<Vec, int> idx;
    for (int i = 0; i < N; ++i) idx[pts[i]] = i;
    std::vector<Perm> gens;
    // x -> xM on points, y -> y M^{-T} on hyperplanes; for M = I + aE_ij that is I - aE_ji
    for (const auto& M : transvections(F, dim + 1)) {
      Mat D(dim + 1, Vec(dim + 1, 0));
      for (int i = 0; i <= dim; ++i)
        for (int j = 0; j <= dim; ++j) D[j][i] = i == j ? 1 : F.neg(M[i][j]);
      std::vector<Point> img(2 * N);
      for (int i = 0; i < N; ++i) {
        img[i] = idx.at(normalize_proj(F, row_times(F, pts[i], M)));
        img[N + i] = N + idx.at(normalize_proj(F, row_times(F, pts[i], D)));
      }
      gens.emplace_back(img);
    }
    std::vector<Point> pol(2 * N);
    for (int i = 0; i < N; ++i) {
      pol[i] = N + i;
      pol[N + i] = i;
    }
    gens.emplace_back(pol);
    b.group = graph_group(b.graph, gens);
  } else if (f == "dual-polar") {
    int q = I("q");
    need(is_prime_power(q), "q must be a prime power");
    need(q <= 3, "dual-polar supports q <= 3");
    auto s = FormedSpace::symplectic(6, q);
    auto set = totally_isotropic_subspaces(s, 3);
    cap(set.spaces.size());
    const Field& F = s.field();
    std::vector<Edge> e;
    int n = static_cast<int>(set.spaces.size());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Mat st = set.spaces[i];
        st.insert(st.end(), set.spaces[j].begin(), set.spaces[j].end());
        if (rank(F, st) == 4) e.emplace_back(i, j);
      }
    b.graph = Graph(n, e);
    for (const auto& sp : set.spaces) {
      std::string lab = "<";
      for (size_t r = 0; r < sp.size(); ++r) lab += (r ? "," : "") + s.vector_str(sp[r]);
      b.graph.labels.push_back(lab + ">");
    }
    b.group = subspace_action(s, set, isometry_generators(s, default_seed())).group();
  } else if (f == "grassmann") {
    int n = I("n"), q = I("q"), k = I("k");
    need(is_prime_power(q) && q <= 256, "q must be a prime power");
    need(k >= 1 && k < n, "grassmann needs 1 <= k < n");
    // Gaussian binomial, guarded against overflow by the cap
    uint64_t cnt = static_cast<uint64_t>(gaussian_binomial(n, k, q));
    cap(cnt);
    const Field& F = Field::get(q);
    auto set = enumerate_subspaces(F, n, k);
    std::vector<Edge> e;
    int nv = static_cast<int>(set.spaces.size());
    for (int i = 0; i < nv; ++i)
      for (int j = i + 1; j < nv; ++j) {
        Mat st = set.spaces[i];
        st.insert(st.end(), set.spaces[j].begin(), set.spaces[j].end());
        if (rank(F, st) == k + 1) e.emplace_back(i, j);
      }
    b.graph = Graph(nv, e);
    for (const auto& sp : set.spaces) {
      std::string lab = "<";
      for (size_t r = 0; r < sp.size(); ++r) lab += (r ? "," : "") + vec_label(F, sp[r]);
      b.graph.labels.push_back(lab + ">");
    }
    std::vector<SemiLinear> gens;
    for (auto& M : transvections(F, n)) gens.push_back(SemiLinear{M, 0});
    b.group = subspace_action(F, set, gens).group();
  } else if (f == "hoffman-singleton") {
    b.graph = hoffman_singleton();
  } else if (f == "g42") {
    b.graph = g42_graph();
  } else if (f == "sylvester") {
    b.graph = sylvester_graph();
  } else if (f == "perkel") {
    auto pk = perkel_graph(default_seed());
    b = pk.built;
  } else if (f == "frames63") {
    b = frames63_graph(default_seed());
  } else if (f == "unitary" || f == "orthogonal") {
    int n = I("n"), q = I("q"), delta = I("delta");
    FormedSpace s = f == "unitary" ? FormedSpace::unitary(n, q)
                                   : FormedSpace::orthogonal(n, q, n % 2 ? "circle"
                                                                         : spec.get("sign", 1) > 0 ? "plus"
                                                                                                   : "minus");
    auto pts = enumerate_points(s);
    cap(pts.points.size());
    b.graph = geometric_orbital_graph(s, pts, delta);
    b.group = point_action(s, pts, isometry_generators(s, default_seed())).group();
  } else if (f == "golay-c12") {
    b.graph = golay_c12();
  } else if (f == "golay-c22") {
    b.graph = golay_c22();
  } else if (f == "golay-c23") {
    b.graph = golay_c23_coset_graph();
  } else if (f == "m23") {
    b.graph = m23_octad_graph();
  } else {
    throw Error("unknown family '" + f + "'");
  }
  if (b.group) validate_automorphisms(b.graph, *b.group);
  return b;
}

}  // namespace dtg
