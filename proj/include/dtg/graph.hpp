#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dtg/perm.hpp"

namespace dtg {

using Vertex = int32_t;
using Edge = std::pair<Vertex, Vertex>;

class Graph {
 public:
  Graph() = default;
  // duplicates are merged; loops and out-of-range endpoints are errors
  Graph(int n, const std::vector<Edge>& edges);

  int n() const { return static_cast<int>(adj_.size()); }
  size_t m() const { return m_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  std::optional<int> valency() const;  // set when regular
  std::vector<Edge> edges() const;     // u < v, sorted

  std::vector<std::string> labels;  // optional side table

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  size_t m_ = 0;
};

struct DistancePartition {
  Vertex source = 0;
  std::vector<std::vector<Vertex>> levels;
};

std::vector<int> bfs_distances(const Graph& g, Vertex u);  // -1 when unreachable
DistancePartition distance_partition(const Graph& g, Vertex u);
std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);
int diameter(const Graph& g);        // throws on disconnected input
std::optional<int> girth(const Graph& g);  // nullopt = infinite
Graph distance_i_graph(const Graph& g, int i);

struct Bipartition {
  bool bipartite = false;
  std::vector<int> color;          // 0/1 per vertex when bipartite
  std::vector<Vertex> odd_cycle;   // closed walk witness otherwise
};
Bipartition is_bipartite(const Graph& g);

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep);
Graph complement(const Graph& g);
bool is_automorphism(const Graph& g, const Perm& p);

// text format: "n m" then m lines "u v" (u < v, sorted); '#' comments
std::string write_graph(const Graph& g);
Graph parse_graph(const std::string& text);
Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace dtg
