#include "doctest.h"
#include "dtg/automorphism.hpp"
#include "dtg/drg.hpp"
#include "dtg/error.hpp"
#include "dtg/families.hpp"
#include "dtg/golay.hpp"
#include "dtg/transitivity.hpp"

using namespace dtg;

namespace {

std::string arr(const Graph& g) { return require_intersection_array(g).str(); }

Built fam(const std::string& f, const std::string& p = "") { return build_family(parse_family(f, p)); }

}  // namespace

TEST_CASE("classical families have their textbook arrays") {
  CHECK(arr(fam("cycle", "n=9").graph) == "{2,1,1,1;1,1,1,1}");
  CHECK(arr(fam("hamming", "d=3,n=3").graph) == "{6,4,2;1,2,3}");
  CHECK(arr(fam("johnson", "n=7,k=3").graph) == "{12,6,2;1,4,9}");
  CHECK(arr(fam("odd", "k=3").graph) == "{4,3,3;1,1,2}");
  CHECK(arr(fam("petersen").graph) == "{3,2;1,1}");
  CHECK(arr(fam("cube", "d=4").graph) == "{4,3,2,1;1,2,3,4}");
  CHECK(arr(fam("complete-multipartite", "m=3,b=4").graph) == "{8,3;1,8}");
  CHECK(arr(fam("pg-incidence", "dim=2,q=3").graph) == "{4,3,3;1,1,4}");
  CHECK(arr(fam("hoffman-singleton").graph) == "{7,6;1,1}");
  CHECK(arr(fam("grassmann", "n=4,q=2,k=2").graph) == "{18,8;1,9}");
}

TEST_CASE("attached groups act by automorphisms") {
  // group order, full Aut order, whether the attached group is distance transitive
  for (auto [f, p, order, aut, dt] :
       {std::tuple{"hamming", "d=3,n=3", 81ull, 1296ull, false}, std::tuple{"odd", "k=3", 5040ull, 5040ull, true},
        std::tuple{"pg-incidence", "dim=2,q=2", 336ull, 336ull, true},
        std::tuple{"johnson", "n=6,k=3", 720ull, 1440ull, true}}) {
    auto b = fam(f, p);
    REQUIRE(b.group.has_value());
    CAPTURE(f);
    CHECK_NOTHROW(validate_automorphisms(b.graph, *b.group));
    CHECK(b.group->is_transitive());
    CHECK(b.group->order() == order);
    CHECK(automorphism_group(b.graph).order == aut);
    CHECK(is_distance_transitive(b.graph, *b.group).ok == dt);
  }
}

TEST_CASE("Hoffman-Singleton subgraphs") {
  Graph g42 = g42_graph();
  CHECK(g42.n() == 42);
  CHECK(arr(g42) == "{6,5,1;1,1,6}");
  CHECK(automorphism_group(g42).order == 5040);
  Graph syl = sylvester_graph();
  CHECK(syl.n() == 36);
  CHECK(arr(syl) == "{5,4,2;1,1,4}");
  CHECK(automorphism_group(syl).order == 1440);
  CHECK(automorphism_group(hoffman_singleton()).order == 252000);
}

TEST_CASE("Perkel graph from a random A5 search") {
  auto p = perkel_graph(1);
  const Graph& g = p.built.graph;
  CHECK(g.n() == 57);
  CHECK(arr(g) == "{6,5,2;1,1,3}");
  CHECK(girth(g) == 5);
  REQUIRE(p.built.group.has_value());
  CHECK(p.built.group->order() == 3420);
  CHECK(p.attempts >= 1);
  // reproducible for a fixed seed
  CHECK(perkel_graph(1).built.graph == g);
}

TEST_CASE("Cayley graphs: raw permutations versus block coordinates") {
  for (auto which : {0, 1}) {
    auto gens = which ? golay_c22_permutations() : golay_c12_permutations();
    int p = which ? 2 : 3;
    std::vector<Perm> S = gens;
    if (p == 3)
      for (const auto& g : gens) S.push_back(g.inverse());
    Graph raw = cayley_perm(gens[0].degree(), gens, S);
    Graph abel = which ? golay_c22() : golay_c12();
    CHECK(raw.n() == abel.n());
    CHECK(raw.valency() == abel.valency());
    CHECK(arr(raw) == arr(abel));
    CHECK(find_isomorphism(raw, abel).has_value());
  }
}

TEST_CASE("Cayley graph input validation") {
  CHECK_THROWS_WITH_AS(cayley_abelian(2, 2, {{0, 0}, {1, 0}, {0, 1}}), doctest::Contains("identity"), Error);
  CHECK_THROWS_WITH_AS(cayley_abelian(3, 1, {{1}}), doctest::Contains("inverse-closed"), Error);
  CHECK_THROWS_WITH_AS(cayley_abelian(2, 2, {{1, 0}}), doctest::Contains("generate"), Error);
  CHECK(arr(cayley_abelian(2, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == "{3,2,1;1,2,3}");
  auto bc = block_coordinates(golay_c12_permutations()[0], 3);
  CHECK(bc.size() == 6);
}

TEST_CASE("Golay codes and coset graphs") {
  auto c = binary_golay23();
  CHECK(c.size() == 4096);
  int minw = 23;
  for (auto w : c)
    if (w) minw = std::min(minw, __builtin_popcount(w));
  CHECK(minw == 7);
  CHECK(arr(golay_c22()) == "{22,21,20;1,2,6}");
}

TEST_CASE("frames graph") {
  auto b = frames63_graph(1);
  CHECK(b.graph.n() == 63);
  CHECK(arr(b.graph) == "{6,4,4;1,1,3}");
  REQUIRE(b.group.has_value());
  CHECK(b.group->order() == 12096);
}

TEST_CASE("family parsing errors") {
  CHECK_THROWS_AS(fam("nope"), Error);
  CHECK_THROWS_AS(fam("hamming", "d=3"), Error);
  CHECK_THROWS_WITH_AS(fam("dual-polar", "q=5"), doctest::Contains("unsupported"), Error);
  CHECK_THROWS_AS(fam("hamming", "d=9,n=4"), Error);  // 262144 vertices
  CHECK(std::find(family_names().begin(), family_names().end(), "perkel") != family_names().end());
}
