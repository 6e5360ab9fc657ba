#include <random>

#include "doctest.h"
#include "dtg/error.hpp"
#include "dtg/families.hpp"
#include "dtg/golay.hpp"
#include "dtg/graph.hpp"
#include "oracles.hpp"

using namespace dtg;

namespace {

std::vector<size_t> level_sizes(const Graph& g, Vertex u) {
  std::vector<size_t> out;
  for (const auto& l : distance_partition(g, u).levels) out.push_back(l.size());
  return out;
}

}  // namespace

TEST_CASE("construction rejects loops and bad endpoints, merges duplicates") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), Error);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), Error);
  Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.m() == 2);
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK_FALSE(g.valency().has_value());
}

TEST_CASE("distance partitions") {
  CHECK(level_sizes(cycle_graph(6), 0) == std::vector<size_t>{1, 2, 2, 1});
  Graph o3 = odd_graph(3);
  for (Vertex u : {0, 17, 34}) CHECK(level_sizes(o3, u) == std::vector<size_t>{1, 4, 12, 18});
  Graph h = hamming_graph(3, 3);
  CHECK(level_sizes(h, 5) == std::vector<size_t>{1, 6, 12, 8});
}

TEST_CASE("BFS distances agree with the all-pairs oracle") {
  for (const Graph& g : {odd_graph(2), hamming_graph(2, 4), pg_incidence(2, 2), sylvester_graph()}) {
    auto d = oracle::distance_matrix(g);
    for (Vertex u = 0; u < g.n(); ++u) CHECK(bfs_distances(g, u) == d[u]);
  }
}

TEST_CASE("diameter") {
  CHECK(diameter(complete_graph(5)) == 1);
  CHECK(diameter(cycle_graph(7)) == 3);
  CHECK(diameter(pg_incidence(2, 2)) == 3);
  Graph two(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_WITH_AS(diameter(two), doctest::Contains("disconnected"), Error);
}

TEST_CASE("girth agrees with the edge-removal oracle") {
  CHECK(girth(cycle_graph(7)) == 7);
  CHECK(girth(pg_incidence(2, 2)) == 6);
  CHECK_FALSE(girth(path_graph(5)).has_value());
  for (const Graph& g : {odd_graph(3), hamming_graph(3, 2), g42_graph(), sylvester_graph(), hoffman_singleton(),
                         johnson_graph(6, 3), pg_incidence(2, 3)})
    CHECK(girth(g).value_or(0) == oracle::naive_girth(g));
}

TEST_CASE("girth of the ternary Golay graph is 3") {
  Graph g = golay_c12();
  CHECK(girth(g) == 3);
}

TEST_CASE("distance-i graphs") {
  Graph c6 = cycle_graph(6);
  Graph d3 = distance_i_graph(c6, 3);
  CHECK(d3.m() == 3);
  CHECK(d3.valency() == 1);
  Graph d2 = distance_i_graph(c6, 2);
  CHECK(d2.m() == 6);
  CHECK(components(d2).size() == 2);
  CHECK_THROWS_WITH_AS(distance_i_graph(c6, 4), doctest::Contains("exceeds diameter"), Error);
  Graph c22 = distance_i_graph(golay_c22(), 2);
  CHECK(is_connected(c22));
  CHECK(c22.valency() == 231);
}

TEST_CASE("bipartite test with witnesses") {
  auto h = is_bipartite(pg_incidence(2, 2));
  REQUIRE(h.bipartite);
  for (Vertex v = 0; v < 7; ++v) CHECK(h.color[v] != h.color[v + 7]);
  auto c7 = is_bipartite(cycle_graph(7));
  CHECK_FALSE(c7.bipartite);
  CHECK(c7.odd_cycle.size() % 2 == 1);
  CHECK(is_bipartite(hamming_graph(3, 2)).bipartite);
}

TEST_CASE("induced subgraph and complement") {
  Graph k5 = complete_graph(5);
  Graph sub = induced_subgraph(k5, {0, 2, 4});
  CHECK(sub.n() == 3);
  CHECK(sub.m() == 3);
  Graph c5 = cycle_graph(5);
  Graph comp = complement(c5);
  CHECK(comp.m() == 5);
  CHECK(comp.valency() == 2);
}

TEST_CASE("graph text round trip and parse errors") {
  Graph g = odd_graph(3);
  Graph back = parse_graph(write_graph(g));
  CHECK(back == g);
  CHECK(parse_graph("# comment\n3 2\n0 1\n1 2\n").m() == 2);
  CHECK_THROWS_WITH_AS(parse_graph("3 2\n0 1\n"), doctest::Contains("header says"), Error);
  CHECK_THROWS_WITH_AS(parse_graph("3 1\n0 x\n"), doctest::Contains("line 2"), Error);
  CHECK_THROWS_AS(parse_graph("3 2\n0 1\n0 1\n"), Error);
}

TEST_CASE("automorphism predicate") {
  Graph c6 = cycle_graph(6);
  CHECK(is_automorphism(c6, Perm({1, 2, 3, 4, 5, 0})));
  CHECK_FALSE(is_automorphism(c6, Perm({1, 0, 2, 3, 4, 5})));
}
