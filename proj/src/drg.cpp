#include "dtg/drg.hpp"

#include <algorithm>
#include <sstream>

#include "dtg/error.hpp"

namespace dtg {

IntersectionArray::IntersectionArray(std::vector<int64_t> b, std::vector<int64_t> c)
    : b_(std::move(b)), c_(std::move(c)) {
  if (b_.empty() || b_.size() != c_.size()) throw Error("array needs d >= 1 entries on each side");
  if (c_[0] != 1) throw Error("c1 must be 1");
  for (int i = 0; i < d(); ++i) {
    if (b_[i] < 1) throw Error("b" + std::to_string(i) + " must be >= 1");
    if (c_[i] < 1) throw Error("c" + std::to_string(i + 1) + " must be >= 1");
  }
  for (int i = 1; i <= d(); ++i)
    if (a(i) < 0) throw Error("a" + std::to_string(i) + " = " + std::to_string(a(i)) + " is negative");
}

IntersectionArray IntersectionArray::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') throw Error("array must look like {b0,...;c1,...}");
  s = s.substr(1, s.size() - 2);
  auto semi = s.find(';');
  if (semi == std::string::npos) throw Error("array is missing ';'");
  auto nums = [](const std::string& part) {
    std::vector<int64_t> out;
    std::stringstream ss(part);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      size_t used = 0;
      long long v;
      try {
        v = std::stoll(tok, &used);
      } catch (...) {
        throw Error("bad array entry '" + tok + "'");
      }
      if (used != tok.size()) throw Error("bad array entry '" + tok + "'");
      out.push_back(v);
    }
    return out;
  };
  return IntersectionArray(nums(s.substr(0, semi)), nums(s.substr(semi + 1)));
}

std::string IntersectionArray::str() const {
  std::string out = "{";
  for (int i = 0; i < d(); ++i) out += (i ? "," : "") + std::to_string(b_[i]);
  out += ";";
  for (int i = 0; i < d(); ++i) out += (i ? "," : "") + std::to_string(c_[i]);
  return out + "}";
}

std::vector<uint64_t> sphere_sizes(const IntersectionArray& a) {
  std::vector<uint64_t> k{1};
  for (int i = 0; i < a.d(); ++i) {
    uint64_t num = mul_checked(k.back(), static_cast<uint64_t>(a.b(i)));
    uint64_t c = static_cast<uint64_t>(a.c(i + 1));
    if (num % c != 0)
      throw Error("inconsistent array: k" + std::to_string(i + 1) + " = " + std::to_string(num) + "/" +
                  std::to_string(c) + " is not an integer");
    k.push_back(num / c);
  }
  return k;
}

bool middle_sphere_inequality(const IntersectionArray& a) {
  if (a.d() != 3) return true;
  auto k = sphere_sizes(a);
  return k[2] >= std::max(k[1], k[3]);
}

std::optional<int> girth_from_array(const IntersectionArray& a) {
  // odd girth 2h+1 from the first a_h > 0, even girth 2j from the first c_j > 1
  std::optional<int> best;
  for (int i = 1; i <= a.d(); ++i) {
    if (a.a(i) > 0) {
      best = 2 * i + 1;
      break;
    }
  }
  for (int j = 2; j <= a.d(); ++j)
    if (a.c(j) > 1) {
      if (!best || 2 * j < *best) best = 2 * j;
      break;
    }
  return best;
}

std::string DrgViolation::str() const {
  std::ostringstream o;
  if (param == 'k')
    o << "deg(" << u << ") = " << expected << " but deg(" << v << ") = " << got;
  else
    o << param << i << "(" << u << "," << v << ") = " << got << ", expected " << expected;
  return o.str();
}

DrgResult intersection_array(const Graph& g) {
  DrgResult res;
  if (g.n() == 0) throw Error("empty graph");
  if (!is_connected(g)) throw Error("disconnected (" + std::to_string(components(g).size()) + " components)");
  for (int v = 1; v < g.n(); ++v)
    if (g.degree(v) != g.degree(0)) {
      res.reason = "not regular";
      res.violation = DrgViolation{0, v, 0, 'k', g.degree(0), g.degree(v)};
      return res;
    }
  std::vector<int64_t> A, B, C;  // indexed by distance
  int d = -1;
  std::vector<int> dist;
  for (int u = 0; u < g.n(); ++u) {
    dist = bfs_distances(g, u);
    int du = *std::max_element(dist.begin(), dist.end());
    if (u == 0) {
      d = du;
      A.assign(d + 1, -1);
      B.assign(d + 1, -1);
      C.assign(d + 1, -1);
    } else if (du != d) {
      // some vertex at distance d from 0 has no counterpart from u; report via b at the last level
      res.reason = "not distance-regular";
      Vertex far = static_cast<Vertex>(std::max_element(dist.begin(), dist.end()) - dist.begin());
      res.violation = DrgViolation{u, far, std::min(du, d), 'b', du < d ? 1 : 0, du < d ? 0 : 1};
      return res;
    }
    for (int v = 0; v < g.n(); ++v) {
      int i = dist[v];
      int64_t a = 0, b = 0, c = 0;
      for (Vertex w : g.neighbors(v)) {
        int j = dist[w];
        if (j == i - 1) ++c;
        else if (j == i) ++a;
        else ++b;
      }
      auto check = [&](std::vector<int64_t>& ref, int64_t val, char p) {
        if (ref[i] < 0) {
          ref[i] = val;
          return true;
        }
        if (ref[i] == val) return true;
        res.reason = "not distance-regular";
        res.violation = DrgViolation{u, v, i, p, ref[i], val};
        return false;
      };
      if (!check(C, c, 'c') || !check(A, a, 'a') || !check(B, b, 'b')) return res;
    }
  }
  if (d == 0) {
    res.reason = "single vertex";
    return res;
  }
  std::vector<int64_t> b(B.begin(), B.begin() + d), c(C.begin() + 1, C.end());
  res.array = IntersectionArray(b, c);
  return res;
}

IntersectionArray require_intersection_array(const Graph& g) {
  auto r = intersection_array(g);
  if (!r.ok()) throw Error(r.reason + (r.violation ? ": " + r.violation->str() : ""));
  return *r.array;
}

std::string Imprimitivity::kind() const {
  std::string ant = "antipodal(" + std::to_string(r) + ")";
  if (bipartite && antipodal) return "bipartite+" + ant;
  if (bipartite) return "bipartite";
  if (antipodal) return ant;
  return "primitive";
}

Imprimitivity classify_imprimitive(const Graph& g, const IntersectionArray& a) {
  Imprimitivity res;
  res.bipartite = is_bipartite(g).bipartite;
  int d = a.d();
  std::vector<std::vector<Vertex>> cls(g.n());
  for (int u = 0; u < g.n(); ++u) {
    auto dist = bfs_distances(g, u);
    for (int v = 0; v < g.n(); ++v)
      if (v == u || dist[v] == d) cls[u].push_back(v);
  }
  // equivalence with uniform class size
  bool eq = true;
  for (int u = 0; u < g.n() && eq; ++u)
    for (Vertex v : cls[u])
      if (cls[v] != cls[u]) {
        eq = false;
        break;
      }
  if (eq && cls[0].size() >= 2) {
    res.antipodal = true;
    res.r = static_cast<int>(cls[0].size());
    for (int u = 0; u < g.n(); ++u)
      if (cls[u][0] == u) res.classes.push_back(cls[u]);
  }
  return res;
}

IntersectionArray antipodal_quotient_array(int64_t n, int64_t r, int64_t c2) {
  if (r < 2) throw Error("r must be >= 2");
  if (n < 3) throw Error("n must be >= 3");
  if (c2 < 1) throw Error("c2 must be >= 1");
  return IntersectionArray({n - 1, (r - 1) * c2, 1}, {1, c2, n - 1});
}

bool geodesic_divisibility(const IntersectionArray& a, int s, uint64_t stabilizer_order) {
  if (s < 1 || s > a.d()) throw Error("s must lie in 1..d");
  uint64_t p = 1;
  for (int i = 0; i < s; ++i) p = mul_checked(p, static_cast<uint64_t>(a.b(i)));
  return stabilizer_order % p == 0;
}

}  // namespace dtg
