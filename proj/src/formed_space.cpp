#include "dtg/formed_space.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "dtg/error.hpp"

namespace dtg {

namespace {

std::map<std::string, std::string> parse_kv(const std::string& s) {
  std::map<std::string, std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw Error("expected key=value, got '" + tok + "'");
    out[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return out;
}

int to_int(const std::string& s) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (...) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw Error("expected an integer, got '" + s + "'");
  return v;
}

}  // namespace

FormedSpace FormedSpace::unitary(int n, int q) {
  if (n < 2) throw Error("unitary space needs n >= 2");
  if (!is_prime_power(q) || q * q > 256) throw Error("unsupported q for a unitary space");
  FormedSpace s;
  s.kind_ = FormKind::Hermitian;
  s.n_ = n;
  s.q_ = q;
  s.F_ = &Field::get(q * q);
  int m = n / 2;
  for (int i = 1; i <= m; ++i) s.names_.push_back("e" + std::to_string(i));
  for (int i = 1; i <= m; ++i) s.names_.push_back("f" + std::to_string(i));
  if (n % 2) s.names_.push_back("d");
  s.gram_.assign(n, Vec(n, 0));
  for (int i = 0; i < m; ++i) s.gram_[i][m + i] = s.gram_[m + i][i] = 1;
  if (n % 2) s.gram_[n - 1][n - 1] = 1;
  for (int k = 1; k < s.F_->q(); ++k)
    if (s.F_->pow(k, q + 1) == 1) s.unit_scalars_.push_back(k);
  return s;
}

FormedSpace FormedSpace::orthogonal(int n, int q, const std::string& type) {
  if (n < 2) throw Error("orthogonal space needs n >= 2");
  if (!is_prime_power(q) || q > 256) throw Error("unsupported q for an orthogonal space");
  FormedSpace s;
  s.kind_ = FormKind::Orthogonal;
  s.n_ = n;
  s.q_ = q;
  s.F_ = &Field::get(q);
  const Field& F = *s.F_;
  bool even_q = F.p() == 2;
  s.gram_.assign(n, Vec(n, 0));
  s.qdiag_.assign(n, 0);
  auto pair = [&](int i, int j) { s.gram_[i][j] = s.gram_[j][i] = 1; };
  if (n % 2) {
    if (type != "circle" && type != "odd" && type != "parabolic")
      throw Error("odd-dimensional orthogonal space needs type=circle");
    if (even_q) throw Error("odd-dimensional orthogonal spaces need odd q");
    int m = n / 2;
    for (int i = 1; i <= m; ++i) s.names_.push_back("e" + std::to_string(i));
    for (int i = 1; i <= m; ++i) s.names_.push_back("f" + std::to_string(i));
    s.names_.push_back("d");
    for (int i = 0; i < m; ++i) pair(i, m + i);
    // q = 5: b(d,d) = 4 as in the worked case; otherwise b(d,d) = 2 so Q(d) = 1
    s.gram_[n - 1][n - 1] = q == 5 ? 4 : F.from_int(2);
  } else if (type == "plus") {
    int m = n / 2;
    for (int i = 1; i <= m; ++i) s.names_.push_back("e" + std::to_string(i));
    for (int i = 1; i <= m; ++i) s.names_.push_back("f" + std::to_string(i));
    for (int i = 0; i < m; ++i) pair(i, m + i);
  } else if (type == "minus") {
    int m = n / 2 - 1;
    for (int i = 1; i <= m; ++i) s.names_.push_back("e" + std::to_string(i));
    s.names_.push_back("d");
    s.names_.push_back("t");
    for (int i = 1; i <= m; ++i) s.names_.push_back("f" + std::to_string(i));
    for (int i = 0; i < m; ++i) pair(i, m + 2 + i);
    int d = m, t = m + 1;
    if (even_q) {
      // Q(d) = 1, b(d,t) = 1, Q(t) = c with x^2+x+c irreducible (c = λ for q = 4)
      int c = -1;
      for (int cand = 1; cand < q && c < 0; ++cand) {
        bool root = false;
        for (int x = 0; x < q; ++x)
          if (F.add(F.add(F.mul(x, x), x), cand) == 0) root = true;
        if (!root) c = cand;
      }
      pair(d, t);
      s.qdiag_[d] = 1;
      s.qdiag_[t] = c;
    } else if (q == 5) {
      s.gram_[d][t] = s.gram_[t][d] = 4;
      s.gram_[d][d] = 3;
      s.gram_[t][t] = 1;
    } else {
      int nu = 0;
      for (int k = 2; k < q; ++k)
        if (!F.is_square(k)) {
          nu = k;
          break;
        }
      s.gram_[d][d] = F.from_int(2);
      s.gram_[t][t] = F.neg(F.mul(F.from_int(2), nu));
    }
  } else {
    throw Error("orthogonal type must be plus, minus or circle");
  }
  if (!even_q) {
    int half = F.inv(F.from_int(2));
    for (int i = 0; i < n; ++i) s.qdiag_[i] = F.mul(half, s.gram_[i][i]);
  }
  s.type_ = n % 2 ? "circle" : type;
  for (int k = 1; k < q; ++k)
    if (F.mul(k, k) == 1) s.unit_scalars_.push_back(k);
  return s;
}

FormedSpace FormedSpace::symplectic(int n, int q) {
  if (n < 2 || n % 2) throw Error("symplectic space needs even n");
  if (!is_prime_power(q) || q > 256) throw Error("unsupported q for a symplectic space");
  FormedSpace s;
  s.kind_ = FormKind::Symplectic;
  s.n_ = n;
  s.q_ = q;
  s.F_ = &Field::get(q);
  int m = n / 2;
  for (int i = 1; i <= m; ++i) s.names_.push_back("e" + std::to_string(i));
  for (int i = 1; i <= m; ++i) s.names_.push_back("f" + std::to_string(i));
  s.gram_.assign(n, Vec(n, 0));
  for (int i = 0; i < m; ++i) {
    s.gram_[i][m + i] = 1;
    s.gram_[m + i][i] = s.F_->neg(1);
  }
  return s;
}

FormedSpace FormedSpace::parse(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw Error("space spec must look like kind:n=..,q=..");
  std::string kind = spec.substr(0, colon);
  auto kv = parse_kv(spec.substr(colon + 1));
  if (!kv.count("n") || !kv.count("q")) throw Error("space spec needs n and q");
  int n = to_int(kv["n"]), q = to_int(kv["q"]);
  if (kind == "unitary") return unitary(n, q);
  if (kind == "symplectic") return symplectic(n, q);
  if (kind == "orthogonal") {
    std::string type = kv.count("type") ? kv["type"] : (n % 2 ? "circle" : "plus");
    return orthogonal(n, q, type);
  }
  throw Error("unknown space kind '" + kind + "'");
}

std::string FormedSpace::spec() const {
  std::string k = kind_ == FormKind::Hermitian ? "unitary" : kind_ == FormKind::Orthogonal ? "orthogonal" : "symplectic";
  std::string out = k + ":n=" + std::to_string(n_) + ",q=" + std::to_string(q_);
  if (kind_ == FormKind::Orthogonal) out += ",type=" + type_;
  return out;
}

int FormedSpace::beta(const Vec& v, const Vec& w) const {
  const Field& F = *F_;
  int r = 0;
  for (int i = 0; i < n_; ++i) {
    if (!v[i]) continue;
    int acc = 0;
    for (int j = 0; j < n_; ++j) {
      if (!gram_[i][j] || !w[j]) continue;
      int wj = kind_ == FormKind::Hermitian ? F.pow(w[j], q_) : w[j];
      acc = F.add(acc, F.mul(gram_[i][j], wj));
    }
    r = F.add(r, F.mul(v[i], acc));
  }
  return r;
}

int FormedSpace::Q(const Vec& v) const {
  if (kind_ != FormKind::Orthogonal) throw Error("Q is only defined on orthogonal spaces");
  const Field& F = *F_;
  int r = 0;
  for (int i = 0; i < n_; ++i) {
    if (!v[i]) continue;
    r = F.add(r, F.mul(qdiag_[i], F.mul(v[i], v[i])));
    for (int j = i + 1; j < n_; ++j)
      if (gram_[i][j] && v[j]) r = F.add(r, F.mul(gram_[i][j], F.mul(v[i], v[j])));
  }
  return r;
}

bool FormedSpace::nonsingular(const Vec& v) const {
  if (kind_ == FormKind::Orthogonal) return Q(v) != 0;
  if (kind_ == FormKind::Hermitian) return beta(v, v) != 0;
  return false;
}

Vec FormedSpace::parse_vector(const std::string& text) const {
  std::string s;
  for (char ch : text)
    if (!isspace(static_cast<unsigned char>(ch))) s += ch;
  Vec v(n_, 0);
  if (s == "0") return v;
  int depth = 0;
  size_t start = 0;
  auto term = [&](const std::string& t) {
    if (t.empty()) throw Error("empty term in '" + text + "'");
    const std::string* best = nullptr;
    for (const auto& nm : names_)
      if (t.size() >= nm.size() && t.compare(t.size() - nm.size(), nm.size(), nm) == 0)
        if (!best || nm.size() > best->size()) best = &nm;
    if (!best) throw Error("term '" + t + "' has no basis vector");
    std::string coef = t.substr(0, t.size() - best->size());
    int c = coef.empty() ? 1 : F_->parse(coef);
    size_t idx = std::find(names_.begin(), names_.end(), *best) - names_.begin();
    v[idx] = F_->add(v[idx], c);
  };
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == '+' && depth == 0) {
      term(s.substr(start, i - start));
      start = i + 1;
    }
  }
  term(s.substr(start));
  return v;
}

std::string FormedSpace::elem_str(int a) const {
  if (F_->q() == 16 || F_->q() == 4) return F_->power_str(a);
  return F_->poly_str(a);
}

std::string FormedSpace::vector_str(const Vec& v) const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    if (!v[i]) continue;
    if (!out.empty()) out += "+";
    std::string c = elem_str(v[i]);
    if (c == "1") c.clear();
    else if (c.find('+') != std::string::npos) c = "(" + c + ")";
    out += c + names_[i];
  }
  return out.empty() ? "0" : out;
}

uint64_t FormedSpace::key(const Vec& v) const {
  uint64_t k = 0;
  for (int i = n_; i-- > 0;) k = k * static_cast<uint64_t>(F_->q()) + static_cast<uint64_t>(v[i]);
  return k;
}

Vec FormedSpace::scale(int k, const Vec& v) const {
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = F_->mul(k, v[i]);
  return out;
}

Vec FormedSpace::add(const Vec& a, const Vec& b) const {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = F_->add(a[i], b[i]);
  return out;
}

std::optional<Vec> FormedSpace::normalize(const Vec& v) const {
  if (kind_ == FormKind::Symplectic) return std::nullopt;
  int val = kind_ == FormKind::Hermitian ? beta(v, v) : Q(v);
  if (val == 0) return std::nullopt;
  std::optional<Vec> best;
  for (int k = 1; k < F_->q(); ++k) {
    int factor = kind_ == FormKind::Hermitian ? F_->pow(k, q_ + 1) : F_->mul(k, k);
    if (F_->mul(factor, val) != 1) continue;
    Vec w = scale(k, v);
    if (!best || w < *best) best = w;
  }
  return best;
}

int PointSet::find(const FormedSpace& s, const Vec& v) const {
  auto w = s.normalize(v);
  if (!w) return -1;
  auto it = index.find(s.key(*w));
  return it == index.end() ? -1 : it->second;
}

PointSet enumerate_points(const FormedSpace& s) {
  if (s.kind() == FormKind::Symplectic) throw Error("symplectic spaces have no non-singular points");
  const Field& F = s.field();
  uint64_t raw = 1;
  for (int i = 0; i < s.n(); ++i) {
    raw *= static_cast<uint64_t>(F.q());
    if (raw > kMaxRawVectors) throw Error("space too large");
  }
  PointSet ps;
  Vec v(s.n(), 0);
  // projective representatives: first nonzero coordinate (from the left) equal to 1
  for (int lead = 0; lead < s.n(); ++lead) {
    int tail = s.n() - lead - 1;
    uint64_t cnt = 1;
    for (int i = 0; i < tail; ++i) cnt *= static_cast<uint64_t>(F.q());
    for (uint64_t c = 0; c < cnt; ++c) {
      std::fill(v.begin(), v.end(), 0);
      v[lead] = 1;
      uint64_t x = c;
      for (int i = s.n() - 1; i > lead; --i) {
        v[i] = static_cast<int>(x % static_cast<uint64_t>(F.q()));
        x /= static_cast<uint64_t>(F.q());
      }
      auto w = s.normalize(v);
      if (!w) continue;
      ps.index[s.key(*w)] = static_cast<int>(ps.points.size());
      ps.points.push_back(*w);
    }
  }
  return ps;
}

std::vector<Vec> span_radical(const FormedSpace& s, const Vec& u, const Vec& w) {
  const Field& F = s.field();
  std::vector<Vec> out;
  for (int k = 0; k < F.q(); ++k)
    for (int l = 0; l < F.q(); ++l) {
      Vec z = s.add(s.scale(k, u), s.scale(l, w));
      if (s.beta(u, z) == 0 && s.beta(w, z) == 0) out.push_back(z);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool span_radical_trivial(const FormedSpace& s, const Vec& u, const Vec& w) {
  for (const auto& z : span_radical(s, u, w))
    if (std::any_of(z.begin(), z.end(), [](int c) { return c != 0; })) return false;
  return true;
}

bool span_complemented(const FormedSpace& s, const Vec& u, const Vec& w) {
  const Field& F = s.field();
  // coefficient rows c with b(x, y) = sum_i x_i c_i
  auto coeffs = [&](const Vec& y) {
    Vec c(s.n(), 0);
    for (int i = 0; i < s.n(); ++i)
      for (int j = 0; j < s.n(); ++j) {
        if (!s.gram()[i][j]) continue;
        int yj = s.kind() == FormKind::Hermitian ? F.pow(y[j], s.q()) : y[j];
        c[i] = F.add(c[i], F.mul(s.gram()[i][j], yj));
      }
    return c;
  };
  Mat perp = nullspace(F, Mat{coeffs(u), coeffs(w)});
  Mat all{u, w};
  for (auto& r : perp) all.push_back(r);
  return rank(F, all) == s.n();
}

int suborbit_of(const FormedSpace& s, const Vec& u0, const Vec& w0) {
  auto u = s.normalize(u0), w = s.normalize(w0);
  if (!u || !w) throw Error("vector is not a non-singular point of the space");
  if (*u == *w) throw Error("base and other point coincide");
  const Field& F = s.field();
  int b = s.beta(*u, *w);
  if (s.kind() == FormKind::Hermitian && s.q() == 3) {
    if (b == 0) return 1;
    return span_radical_trivial(s, *u, *w) ? 3 : 2;
  }
  if (s.kind() == FormKind::Hermitian && s.q() == 4) {
    if (b == 0) return 1;
    return F.pow(b, 5) == 1 ? 2 : 3;  // <λ^3> is the subgroup of order 5
  }
  if (s.kind() == FormKind::Orthogonal && s.q() == 5) {
    if (b == 0) return 1;
    return (b == 1 || b == 4) ? 2 : 3;
  }
  if (s.kind() == FormKind::Orthogonal && s.q() == 4) {
    if (b == 0) return 1;
    return b == 1 ? 2 : 3;
  }
  throw Error("unclassified case " + s.spec());
}

Graph geometric_orbital_graph(const FormedSpace& s, const PointSet& p, int delta_index) {
  if (p.points.size() > 5000) throw Error("point set exceeds the 5000-vertex cap");
  if (delta_index < 1 || delta_index > 3) throw Error("delta index must be 1, 2 or 3");
  std::vector<Edge> e;
  int n = static_cast<int>(p.points.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (suborbit_of(s, p.points[i], p.points[j]) == delta_index) e.emplace_back(i, j);
  Graph g(n, e);
  for (const auto& v : p.points) g.labels.push_back(s.vector_str(v));
  return g;
}

Vec SemiLinear::apply(const Field& F, const Vec& x) const {
  size_t n = x.size();
  Vec y(n, 0);
  for (size_t i = 0; i < n; ++i) {
    if (!x[i]) continue;
    int xi = frob ? F.frob(x[i], frob) : x[i];
    for (size_t j = 0; j < n; ++j)
      if (m[i][j]) y[j] = F.add(y[j], F.mul(xi, m[i][j]));
  }
  return y;
}

bool preserves_form(const FormedSpace& s, const SemiLinear& g) {
  const Field& F = s.field();
  int n = s.n();
  std::vector<Vec> img(n);
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    img[i] = g.apply(F, e);
  }
  if (rank(F, img) != n) return false;
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    if (s.kind() == FormKind::Orthogonal && s.Q(img[i]) != F.frob(s.Q(e), g.frob)) return false;
    for (int j = 0; j < n; ++j)
      if (s.beta(img[i], img[j]) != F.frob(s.gram()[i][j], g.frob)) return false;
  }
  return true;
}

std::vector<SemiLinear> isometry_generators(const FormedSpace& s, uint64_t seed, int count) {
  const Field& F = s.field();
  int n = s.n();
  if (count <= 0) count = n + 3;
  std::mt19937_64 rng(seed);
  std::vector<SemiLinear> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > 100000) throw Error("could not find isometries of " + s.spec());
    Vec v(n);
    for (auto& c : v) c = static_cast<int>(rng() % static_cast<uint64_t>(F.q()));
    if (std::all_of(v.begin(), v.end(), [](int c) { return c == 0; })) continue;
    std::vector<int> as;
    for (int a = 1; a < F.q(); ++a) as.push_back(a);
    std::shuffle(as.begin(), as.end(), rng);
    for (int a : as) {
      // x -> x + a b(x,v) v
      SemiLinear g;
      g.m.assign(n, Vec(n, 0));
      for (int i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        int c = F.mul(a, s.beta(e, v));
        for (int j = 0; j < n; ++j) g.m[i][j] = F.add(e[j], F.mul(c, v[j]));
      }
      bool ident = true;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (g.m[i][j] != (i == j)) ident = false;
      if (ident || !preserves_form(s, g)) continue;
      out.push_back(std::move(g));
      break;
    }
  }
  if (F.f() > 1) {
    SemiLinear fr;
    fr.m.assign(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) fr.m[i][i] = 1;
    fr.frob = 1;
    if (preserves_form(s, fr)) out.push_back(std::move(fr));
  }
  return out;
}

ActionTable point_action(const FormedSpace& s, const PointSet& p, const std::vector<SemiLinear>& gens) {
  ActionTable t;
  t.m = static_cast<int>(p.points.size());
  for (const auto& g : gens) {
    std::vector<Point> img(t.m);
    for (int i = 0; i < t.m; ++i) {
      int j = p.find(s, g.apply(s.field(), p.points[i]));
      if (j < 0) throw Error("map does not preserve the point set");
      img[i] = j;
    }
    t.gens.emplace_back(img);
  }
  return t;
}

ActionTable unitary_group_action(int n, int q, uint64_t seed) {
  auto s = FormedSpace::unitary(n, q);
  auto p = enumerate_points(s);
  if (p.points.size() > 1000) throw Error("unitary action capped at 1000 points");
  return point_action(s, p, isometry_generators(s, seed));
}

namespace {

std::string mat_key(const Mat& m) {
  std::string k;
  for (const auto& r : m)
    for (int x : r) k.push_back(static_cast<char>(x));
  return k;
}

}  // namespace

int SubspaceSet::find(const Field& F, Mat basis) const {
  if (rref(F, basis) != k) return -1;
  auto it = index.find(mat_key(basis));
  return it == index.end() ? -1 : it->second;
}

SubspaceSet enumerate_subspaces(const Field& F, int n, int k, const std::function<bool(const Mat&)>& keep) {
  SubspaceSet out;
  out.n = n;
  out.k = k;
  if (k < 1 || k > n) throw Error("subspace dimension out of range");
  std::vector<int> piv(k);
  Mat m(k, Vec(n, 0));
  // rows are filled one at a time so keep() can prune on a prefix of rows
  std::function<void(int)> fill_row;
  std::function<void(int, int)> choose;
  auto rec_free = [&](auto&& self, int row, int col) -> void {
    if (col == n) {
      if (keep && !keep(Mat(m.begin(), m.begin() + row + 1))) return;
      fill_row(row + 1);
      return;
    }
    bool is_free = col > piv[row] && std::find(piv.begin(), piv.end(), col) == piv.end();
    if (!is_free) {
      self(self, row, col + 1);
      return;
    }
    for (int a = 0; a < F.q(); ++a) {
      m[row][col] = a;
      self(self, row, col + 1);
    }
    m[row][col] = 0;
  };
  fill_row = [&](int row) {
    if (row == k) {
      out.index[mat_key(m)] = static_cast<int>(out.spaces.size());
      out.spaces.push_back(m);
      return;
    }
    for (auto& x : m[row]) x = 0;
    m[row][piv[row]] = 1;
    rec_free(rec_free, row, 0);
  };
  choose = [&](int i, int start) {
    if (i == k) {
      for (auto& r : m) std::fill(r.begin(), r.end(), 0);
      fill_row(0);
      return;
    }
    for (int c = start; c <= n - (k - i); ++c) {
      piv[i] = c;
      choose(i + 1, c + 1);
    }
  };
  choose(0, 0);
  return out;
}

SubspaceSet totally_isotropic_subspaces(const FormedSpace& s, int k) {
  return enumerate_subspaces(s.field(), s.n(), k, [&](const Mat& rows) {
    const Vec& r = rows.back();
    if (s.kind() == FormKind::Orthogonal && s.Q(r) != 0) return false;
    for (const auto& o : rows)
      if (s.beta(o, r) != 0) return false;
    return true;
  });
}

ActionTable subspace_action(const Field& F, const SubspaceSet& set, const std::vector<SemiLinear>& gens) {
  ActionTable t;
  t.m = static_cast<int>(set.spaces.size());
  for (const auto& g : gens) {
    std::vector<Point> img(t.m);
    for (int i = 0; i < t.m; ++i) {
      Mat b;
      for (const auto& r : set.spaces[i]) b.push_back(g.apply(F, r));
      int j = set.find(F, b);
      if (j < 0) throw Error("map does not preserve the subspace family");
      img[i] = j;
    }
    t.gens.emplace_back(img);
  }
  return t;
}

ActionTable subspace_action(const FormedSpace& s, const SubspaceSet& set, const std::vector<SemiLinear>& gens) {
  return subspace_action(s.field(), set, gens);
}

}  // namespace dtg
