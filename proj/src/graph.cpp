#include "dtg/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "dtg/error.hpp"
#include "dtg/genfile.hpp"

namespace dtg {

Graph::Graph(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw Error("negative vertex count");
  adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw Error("loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  m_ = 0;
  for (auto& a : adj_) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    m_ += a.size();
  }
  m_ /= 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::optional<int> Graph::valency() const {
  if (adj_.empty()) return 0;
  int k = degree(0);
  for (int v = 1; v < n(); ++v)
    if (degree(v) != k) return std::nullopt;
  return k;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex u) {
  std::vector<int> dist(g.n(), -1);
  std::vector<Vertex> q{u};
  dist[u] = 0;
  for (size_t h = 0; h < q.size(); ++h) {
    Vertex x = q[h];
    for (Vertex y : g.neighbors(x))
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push_back(y);
      }
  }
  return dist;
}

DistancePartition distance_partition(const Graph& g, Vertex u) {
  if (u < 0 || u >= g.n()) throw Error("vertex out of range");
  DistancePartition p;
  p.source = u;
  auto dist = bfs_distances(g, u);
  for (int v = 0; v < g.n(); ++v) {
    if (dist[v] < 0) continue;
    if (static_cast<int>(p.levels.size()) <= dist[v]) p.levels.resize(dist[v] + 1);
    p.levels[dist[v]].push_back(v);
  }
  return p;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<int> comp(g.n(), -1);
  std::vector<std::vector<Vertex>> out;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> q{s};
    comp[s] = static_cast<int>(out.size());
    for (size_t h = 0; h < q.size(); ++h)
      for (Vertex y : g.neighbors(q[h]))
        if (comp[y] < 0) {
          comp[y] = comp[s];
          q.push_back(y);
        }
    std::sort(q.begin(), q.end());
    out.push_back(std::move(q));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.n() <= 1 || components(g).size() == 1; }

int diameter(const Graph& g) {
  if (g.n() == 0) throw Error("empty graph");
  auto comps = components(g);
  if (comps.size() > 1) throw Error("disconnected (" + std::to_string(comps.size()) + " components)");
  int d = 0;
  for (int u = 0; u < g.n(); ++u) {
    auto dist = bfs_distances(g, u);
    d = std::max(d, *std::max_element(dist.begin(), dist.end()));
  }
  return d;
}

std::optional<int> girth(const Graph& g) {
  int best = INT32_MAX;
  std::vector<int> dist(g.n(), -1), parent(g.n(), -1);
  std::vector<Vertex> q;
  for (int s = 0; s < g.n(); ++s) {
    q.assign(1, s);
    dist[s] = 0;
    parent[s] = -1;
    for (size_t h = 0; h < q.size(); ++h) {
      Vertex x = q[h];
      if (2 * dist[x] + 1 >= best) break;  // nothing shorter through s
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push_back(y);
        } else if (y != parent[x]) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
    for (Vertex v : q) dist[v] = -1;
  }
  if (best == INT32_MAX) return std::nullopt;
  return best;
}

Graph distance_i_graph(const Graph& g, int i) {
  if (i < 1) throw Error("distance must be positive");
  int d = diameter(g);
  if (i > d) throw Error("i exceeds diameter (" + std::to_string(i) + " > " + std::to_string(d) + ")");
  std::vector<Edge> e;
  for (int u = 0; u < g.n(); ++u) {
    auto dist = bfs_distances(g, u);
    for (int v = u + 1; v < g.n(); ++v)
      if (dist[v] == i) e.emplace_back(u, v);
  }
  Graph h(g.n(), e);
  h.labels = g.labels;
  return h;
}

Bipartition is_bipartite(const Graph& g) {
  Bipartition b;
  b.color.assign(g.n(), -1);
  std::vector<int> parent(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (b.color[s] >= 0) continue;
    b.color[s] = 0;
    std::vector<Vertex> q{s};
    for (size_t h = 0; h < q.size(); ++h) {
      Vertex x = q[h];
      for (Vertex y : g.neighbors(x)) {
        if (b.color[y] < 0) {
          b.color[y] = 1 - b.color[x];
          parent[y] = x;
          q.push_back(y);
        } else if (b.color[y] == b.color[x]) {
          // odd cycle: x .. lca .. y plus the edge y-x
          std::vector<Vertex> px, py;
          for (int a = x; a >= 0; a = parent[a]) px.push_back(a);
          for (int a = y; a >= 0; a = parent[a]) py.push_back(a);
          while (px.size() > 1 && py.size() > 1 && px[px.size() - 2] == py[py.size() - 2]) {
            px.pop_back();
            py.pop_back();
          }
          // px.back() == py.back() == lca
          b.odd_cycle = px;
          for (size_t k = py.size() - 1; k-- > 0;) b.odd_cycle.push_back(py[k]);
          std::reverse(b.odd_cycle.begin(), b.odd_cycle.end());
          b.color.clear();
          b.bipartite = false;
          return b;
        }
      }
    }
  }
  b.bipartite = true;
  return b;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
  std::vector<int> idx(g.n(), -1);
  for (size_t i = 0; i < keep.size(); ++i) idx[keep[i]] = static_cast<int>(i);
  std::vector<Edge> e;
  for (size_t i = 0; i < keep.size(); ++i)
    for (Vertex y : g.neighbors(keep[i]))
      if (idx[y] > static_cast<int>(i)) e.emplace_back(static_cast<int>(i), idx[y]);
  Graph h(static_cast<int>(keep.size()), e);
  if (!g.labels.empty())
    for (Vertex v : keep) h.labels.push_back(g.labels[v]);
  return h;
}

Graph complement(const Graph& g) {
  std::vector<Edge> e;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) e.emplace_back(u, v);
  Graph h(g.n(), e);
  h.labels = g.labels;
  return h;
}

bool is_automorphism(const Graph& g, const Perm& p) {
  if (p.degree() != g.n()) return false;
  for (int u = 0; u < g.n(); ++u) {
    if (g.degree(u) != g.degree(p[u])) return false;
    for (Vertex v : g.neighbors(u))
      if (u < v && !g.has_edge(p[u], p[v])) return false;
  }
  return true;
}

std::string write_graph(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& msg) -> Error {
    return Error("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    long long a, b;
    if (!(ls >> a)) {
      if (ls.eof()) continue;  // blank
      throw fail("expected two integers");
    }
    if (!(ls >> b)) throw fail("expected two integers");
    std::string extra;
    if (ls >> extra) throw fail("trailing text '" + extra + "'");
    if (n < 0) {
      if (a < 0 || b < 0 || a > 5000000) throw fail("bad header");
      n = a;
      m = b;
      continue;
    }
    if (a < 0 || b < 0 || a >= n || b >= n) throw fail("vertex out of range");
    if (a == b) throw fail("loop");
    if (a > b) std::swap(a, b);
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (n < 0) throw Error("missing 'n m' header");
  if (static_cast<long long>(edges.size()) != m)
    throw Error("header says " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  std::sort(edges.begin(), edges.end());
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      throw Error("duplicate edge " + std::to_string(edges[i].first) + " " + std::to_string(edges[i].second));
  return Graph(static_cast<int>(n), edges);
}

Graph read_graph_file(const std::string& path) {
  try {
    return parse_graph(read_text_file(path));
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

void write_graph_file(const std::string& path, const Graph& g) { write_text_file(path, write_graph(g)); }

}  // namespace dtg
