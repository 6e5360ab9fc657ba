#include "doctest.h"
#include "dtg/automorphism.hpp"
#include "dtg/drg.hpp"
#include "dtg/error.hpp"
#include "dtg/families.hpp"
#include "dtg/transitivity.hpp"
#include "oracles.hpp"

using namespace dtg;

namespace {

PermGroup dihedral(int n) {
  std::vector<Point> rot(n), ref(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    ref[i] = (n - i) % n;
  }
  return PermGroup(n, {Perm(rot), Perm(ref)});
}

PermGroup cyclic(int n) {
  std::vector<Point> rot(n);
  for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
  return PermGroup(n, {Perm(rot)});
}

// S_n on 2-subsets in lexicographic order
PermGroup pair_action(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  auto idx = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return static_cast<Point>(std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) - pairs.begin());
  };
  std::vector<Perm> gens;
  PermGroup sym = PermGroup::symmetric(n);
  for (const auto& s : sym.generators()) {
    std::vector<Point> img;
    for (auto [a, b] : pairs) img.push_back(idx(s[a], s[b]));
    gens.push_back(Perm(img));
  }
  return PermGroup(static_cast<int>(pairs.size()), gens);
}

}  // namespace

TEST_CASE("orbital graphs of S5 on pairs") {
  PermGroup g = pair_action(5);
  REQUIRE(g.order() == 120);
  auto orbs = orbitals(g);
  REQUIRE(orbs.size() == 3);
  CHECK(subdegrees(orbs) == std::vector<uint64_t>{1, 6, 3});
  // suborbit of size 3 (disjoint pairs) gives the Petersen graph
  Point rep = orbs[2].points.size() == 3 ? orbs[2].points[0] : orbs[1].points[0];
  Graph pet = orbital_graph(g, rep);
  CHECK(pet.valency() == 3);
  CHECK(intersection_array(pet).array->str() == "{3,2;1,1}");
  CHECK(find_isomorphism(pet, odd_graph(2)).has_value());
}

TEST_CASE("automorphism validation") {
  CHECK_NOTHROW(validate_automorphisms(cycle_graph(6), dihedral(6)));
  CHECK_THROWS_WITH_AS(validate_automorphisms(path_graph(6), dihedral(6)),
                       doctest::Contains("not an automorphism"), Error);
}

TEST_CASE("distance transitivity decisions") {
  Graph c7 = cycle_graph(7);
  CHECK(is_distance_transitive(c7, dihedral(7)).ok);
  auto z7 = is_distance_transitive(c7, cyclic(7));
  CHECK_FALSE(z7.ok);
  REQUIRE(z7.witness.has_value());
  auto w = *z7.witness;
  auto d1 = bfs_distances(c7, w[0]), d2 = bfs_distances(c7, w[2]);
  CHECK(d1[w[1]] == d2[w[3]]);
  Graph o3 = odd_graph(3);
  CHECK(is_distance_transitive(o3, automorphism_group(o3).group()).ok);
}

TEST_CASE("distance transitivity agrees with orbit counting on pairs") {
  for (auto [g, grp] : {std::pair{cycle_graph(8), dihedral(8)}, std::pair{cycle_graph(8), cyclic(8)},
                        std::pair{odd_graph(2), automorphism_group(odd_graph(2)).group()}}) {
    auto d = oracle::distance_matrix(g);
    std::vector<std::vector<int>> pairs;
    for (int u = 0; u < g.n(); ++u)
      for (int v = 0; v < g.n(); ++v) pairs.push_back({u, v});
    size_t orbs = oracle::tuple_orbits(grp.generators(), pairs);
    CHECK(is_distance_transitive(g, grp).ok == (orbs == static_cast<size_t>(diameter(g) + 1)));
  }
}

TEST_CASE("geodesic enumeration matches the oracle") {
  CHECK(enumerate_geodesics(cycle_graph(6), 2).tuples.size() == 12);
  CHECK(enumerate_geodesics(pg_incidence(2, 2), 2).tuples.size() == 84);
  CHECK(enumerate_geodesics(odd_graph(2), 2).tuples.size() == 60);
  for (const Graph& g : {hamming_graph(3, 2), johnson_graph(5, 2), odd_graph(3)})
    for (int s = 1; s <= diameter(g); ++s) {
      auto got = enumerate_geodesics(g, s).tuples;
      auto want = oracle::all_geodesics(g, s);
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      std::vector<std::vector<int>> gi;
      for (auto& t : got) gi.emplace_back(t.begin(), t.end());
      CHECK(gi == want);
    }
  CHECK_THROWS_AS(enumerate_geodesics(cycle_graph(6), 4), Error);
}

TEST_CASE("s-arc and s-geodesic transitivity against orbit counts") {
  Graph h = pg_incidence(2, 2);
  PermGroup ah = automorphism_group(h).group();
  CHECK(ah.order() == 336);
  Graph p = odd_graph(2);
  PermGroup ap = automorphism_group(p).group();
  for (int s = 1; s <= 5; ++s) {
    bool arc_h = oracle::tuple_orbits(ah.generators(), oracle::all_arcs(h, s)) == 1;
    CHECK(is_s_arc_transitive(h, ah, s) == arc_h);
    bool arc_p = oracle::tuple_orbits(ap.generators(), oracle::all_arcs(p, s)) == 1;
    CHECK(is_s_arc_transitive(p, ap, s) == arc_p);
  }
  CHECK(is_s_arc_transitive(h, ah, 4));
  CHECK_FALSE(is_s_arc_transitive(h, ah, 5));
  CHECK(is_s_arc_transitive(p, ap, 3));
  CHECK_FALSE(is_s_arc_transitive(p, ap, 4));
  for (int s = 1; s <= 3; ++s) CHECK(is_s_geodesic_transitive(h, ah, s));
  Graph c8 = cycle_graph(8);
  CHECK(is_s_geodesic_transitive(c8, dihedral(8), 4));
  CHECK_FALSE(is_s_geodesic_transitive(c8, cyclic(8), 1));
}

TEST_CASE("automorphism group orders against brute force") {
  CHECK(automorphism_group(cycle_graph(6)).order == 12);
  for (const Graph& g : {cycle_graph(7), path_graph(5), complete_graph(5), complete_multipartite(3, 2),
                         Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}})})
    CHECK(automorphism_group(g).order == oracle::brute_aut_count(g));
  auto a = automorphism_group(odd_graph(2));
  CHECK(a.order == 120);
  CHECK(oracle::closure_size(10, a.generators) == 120);
  for (const auto& x : a.generators) CHECK(is_automorphism(odd_graph(2), x));
}

TEST_CASE("isomorphism search") {
  Graph p = odd_graph(2);
  std::vector<Point> img{3, 7, 1, 9, 0, 5, 2, 8, 6, 4};
  Perm r(img);
  std::vector<Edge> e;
  for (auto [u, v] : p.edges()) e.emplace_back(r[u], r[v]);
  Graph q(10, e);
  auto iso = find_isomorphism(p, q);
  REQUIRE(iso.has_value());
  for (auto [u, v] : p.edges()) CHECK(q.has_edge((*iso)[u], (*iso)[v]));
  CHECK_FALSE(find_isomorphism(p, johnson_graph(5, 2)).has_value());
}

TEST_CASE("budget exhaustion is reported") {
  CHECK_THROWS_AS(automorphism_group(hamming_graph(4, 3), 2), BudgetExceeded);
}
