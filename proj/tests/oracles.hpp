#pragma once
// brute-force references used only by the tests
#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_set>
#include <vector>

#include "dtg/graph.hpp"
#include "dtg/perm.hpp"

namespace oracle {

using dtg::Perm;

// explicit element closure; stops (returns 0) above cap
inline size_t closure_size(int n, const std::vector<Perm>& gens, size_t cap = 1000000) {
  std::unordered_set<Perm, dtg::PermHash> seen;
  std::vector<Perm> q{Perm(n)};
  seen.insert(q[0]);
  for (size_t h = 0; h < q.size(); ++h) {
    for (const auto& s : gens) {
      Perm x = q[h] * s;
      if (seen.insert(x).second) {
        if (seen.size() > cap) return 0;
        q.push_back(x);
      }
    }
  }
  return seen.size();
}

// number of orbits of <gens> on a set of tuples (each tuple mapped pointwise)
inline size_t tuple_orbits(const std::vector<Perm>& gens, const std::vector<std::vector<int>>& tuples) {
  std::set<std::vector<int>> all(tuples.begin(), tuples.end()), seen;
  size_t orbits = 0;
  for (const auto& t : all) {
    if (seen.count(t)) continue;
    ++orbits;
    std::vector<std::vector<int>> q{t};
    seen.insert(t);
    for (size_t h = 0; h < q.size(); ++h)
      for (const auto& g : gens) {
        auto y = q[h];
        for (auto& p : y) p = g[p];
        if (seen.insert(y).second) q.push_back(y);
      }
  }
  return orbits;
}

inline std::vector<std::vector<int>> all_arcs(const dtg::Graph& g, int s) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == s + 1) {
      out.push_back(cur);
      return;
    }
    for (int y : g.neighbors(cur.back())) {
      if (cur.size() >= 2 && y == cur[cur.size() - 2]) continue;
      cur.push_back(y);
      self(self);
      cur.pop_back();
    }
  };
  for (int v = 0; v < g.n(); ++v) {
    cur = {v};
    rec(rec);
  }
  return out;
}

inline std::vector<std::vector<int>> all_geodesics(const dtg::Graph& g, int s) {
  std::vector<std::vector<int>> out;
  for (auto& a : all_arcs(g, s))
    if (dtg::bfs_distances(g, a[0])[a.back()] == s) out.push_back(a);
  return out;
}

// all-pairs distances by repeated relaxation (Floyd-Warshall); -1 unreachable
inline std::vector<std::vector<int>> distance_matrix(const dtg::Graph& g) {
  int n = g.n();
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (int v : g.neighbors(u)) d[u][v] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& r : d)
    for (auto& x : r)
      if (x >= inf) x = -1;
  return d;
}

// {b0..b_{d-1}} and {c1..c_d} from every ordered pair, or nullopt when some pair disagrees
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> naive_array(const dtg::Graph& g) {
  auto d = distance_matrix(g);
  int n = g.n(), diam = 0;
  for (auto& r : d)
    for (int x : r) {
      if (x < 0) return std::nullopt;
      diam = std::max(diam, x);
    }
  std::vector<int> b(diam + 1, -1), c(diam + 1, -1);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      int i = d[u][v], bi = 0, ci = 0;
      for (int w : g.neighbors(v)) {
        if (d[u][w] == i + 1) ++bi;
        if (d[u][w] == i - 1) ++ci;
      }
      if (b[i] == -1) b[i] = bi;
      if (c[i] == -1) c[i] = ci;
      if (b[i] != bi || c[i] != ci) return std::nullopt;
    }
  return std::make_pair(std::vector<int>(b.begin(), b.end() - 1), std::vector<int>(c.begin() + 1, c.end()));
}

// shortest cycle through each edge: drop the edge, BFS between its ends; 0 means acyclic
inline int naive_girth(const dtg::Graph& g) {
  int best = 0;
  for (auto [u, v] : g.edges()) {
    std::vector<int> dist(g.n(), -1);
    std::vector<int> q{u};
    dist[u] = 0;
    for (size_t h = 0; h < q.size(); ++h)
      for (int w : g.neighbors(q[h])) {
        if ((q[h] == u && w == v) || (q[h] == v && w == u)) continue;
        if (dist[w] < 0) {
          dist[w] = dist[q[h]] + 1;
          q.push_back(w);
        }
      }
    if (dist[v] > 0 && (best == 0 || dist[v] + 1 < best)) best = dist[v] + 1;
  }
  return best;
}

// |Aut| by trying every permutation; n <= 9
inline size_t brute_aut_count(const dtg::Graph& g) {
  std::vector<int> p(g.n());
  std::iota(p.begin(), p.end(), 0);
  size_t count = 0;
  auto edges = g.edges();
  do {
    bool ok = true;
    for (auto [u, v] : edges)
      if (!g.has_edge(p[u], p[v])) {
        ok = false;
        break;
      }
    if (ok) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// closed orbit of a set of points under gens
inline std::set<int> orbit(const std::vector<Perm>& gens, int start) {
  std::set<int> seen{start};
  std::vector<int> q{start};
  for (size_t h = 0; h < q.size(); ++h)
    for (const auto& g : gens)
      if (seen.insert(g[q[h]]).second) q.push_back(g[q[h]]);
  return seen;
}

}  // namespace oracle
