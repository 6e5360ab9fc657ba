#include "doctest.h"
#include "dtg/drg.hpp"
#include "dtg/error.hpp"
#include "dtg/families.hpp"
#include "dtg/golay.hpp"
#include "oracles.hpp"

using namespace dtg;

namespace {

IntersectionArray A(const std::string& s) { return IntersectionArray::parse(s); }

}  // namespace

TEST_CASE("array parsing and validation") {
  auto a = A("{4,3,3;1,1,2}");
  CHECK(a.d() == 3);
  CHECK(a.valency() == 4);
  CHECK(a.a(3) == 2);
  CHECK(a.str() == "{4,3,3;1,1,2}");
  CHECK_THROWS_AS(A("{4,3;2,1}"), Error);   // c1 != 1
  CHECK_THROWS_AS(A("{4,3,3;1,1}"), Error); // lengths differ
  CHECK_THROWS_AS(A("4,3;1,1"), Error);
  CHECK_THROWS_AS(A("{2,3;1,1}"), Error);   // a1 negative
}

TEST_CASE("intersection arrays of constructed graphs match the pairwise oracle") {
  for (const Graph& g : {odd_graph(3), hamming_graph(3, 3), pg_incidence(2, 2), johnson_graph(7, 3), g42_graph(),
                         sylvester_graph(), cycle_graph(7), complete_multipartite(3, 2)}) {
    auto r = intersection_array(g);
    auto o = oracle::naive_array(g);
    REQUIRE(r.ok());
    REQUIRE(o.has_value());
    std::vector<int> b(r.array->bs().begin(), r.array->bs().end()), c(r.array->cs().begin(), r.array->cs().end());
    CHECK(b == o->first);
    CHECK(c == o->second);
  }
  CHECK(intersection_array(odd_graph(3)).array->str() == "{4,3,3;1,1,2}");
  CHECK(intersection_array(pg_incidence(2, 2)).array->str() == "{3,2,2;1,1,3}");
}

TEST_CASE("ternary Golay array") {
  CHECK(intersection_array(golay_c12()).array->str() == "{24,22,20;1,2,12}");
}

TEST_CASE("non-distance-regular graphs give a witness") {
  auto p = intersection_array(path_graph(3));
  CHECK_FALSE(p.ok());
  CHECK_FALSE(oracle::naive_array(path_graph(3)).has_value());
  // regular but not distance-regular: the 6-prism
  Graph prism(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  auto r = intersection_array(prism);
  REQUIRE_FALSE(r.ok());
  REQUIRE(r.violation.has_value());
  CHECK(r.reason == "not distance-regular");
  CHECK_FALSE(oracle::naive_array(prism).has_value());
}

TEST_CASE("sphere sizes") {
  CHECK(sphere_sizes(A("{6,4,4;1,1,3}")) == std::vector<uint64_t>{1, 6, 24, 32});
  CHECK(sphere_sizes(A("{253,210,3;1,30,231}")) == std::vector<uint64_t>{1, 253, 1771, 23});
  // the printed 208-point array does not fit 208 points
  auto k = sphere_sizes(A("{12,10,3;1,1,8}"));
  CHECK(k == std::vector<uint64_t>{1, 12, 120, 45});
  CHECK(k[0] + k[1] + k[2] + k[3] == 178);
  CHECK_THROWS_WITH_AS(sphere_sizes(A("{5,4;1,3}")), doctest::Contains("inconsistent array"), Error);
}

TEST_CASE("middle sphere inequality is not universal") {
  CHECK(middle_sphere_inequality(A("{12,10,5;1,1,8}")));
  CHECK_FALSE(middle_sphere_inequality(A("{4,3,3;1,1,2}")));  // O3: 1,4,12,18
}

TEST_CASE("girth from array") {
  CHECK(girth_from_array(A("{4,3,3;1,1,2}")) == 6);
  CHECK(girth_from_array(A("{2,1,1;1,1,1}")) == 7);
  CHECK(girth_from_array(A("{22,21,20;1,2,6}")) == 4);
  CHECK(girth_from_array(A("{24,22,20;1,2,12}")) == 3);
  CHECK(girth_from_array(A("{6,5,1;1,1,6}")) == 5);
}

TEST_CASE("imprimitivity classes") {
  Graph cube = hamming_graph(3, 2);
  auto ci = classify_imprimitive(cube, *intersection_array(cube).array);
  CHECK(ci.bipartite);
  CHECK(ci.antipodal);
  CHECK(ci.r == 2);
  CHECK(ci.classes.size() == 4);
  Graph h = pg_incidence(2, 2);
  auto hi = classify_imprimitive(h, *intersection_array(h).array);
  CHECK(hi.bipartite);
  CHECK_FALSE(hi.antipodal);  // k3 = 4 and the farthest relation is not an equivalence
  Graph o3 = odd_graph(3);
  auto oi = classify_imprimitive(o3, *intersection_array(o3).array);
  CHECK(oi.kind() == "primitive");
  CHECK(is_connected(distance_i_graph(o3, 3)));
}

TEST_CASE("antipodal quotient arrays") {
  CHECK(antipodal_quotient_array(4, 2, 2).str() == "{3,2,1;1,2,3}");
  CHECK(antipodal_quotient_array(4, 2, 2) == *intersection_array(hamming_graph(3, 2)).array);
  CHECK(antipodal_quotient_array(7, 2, 3).str() == "{6,3,1;1,3,6}");
  CHECK(antipodal_quotient_array(3, 2, 1).str() == "{2,1,1;1,1,2}");
  CHECK_THROWS_AS(antipodal_quotient_array(4, 1, 2), Error);
}

TEST_CASE("geodesic divisibility") {
  CHECK(geodesic_divisibility(A("{5,4,2;1,1,4}"), 3, 40));
  CHECK_FALSE(geodesic_divisibility(A("{6,5,1;1,1,6}"), 2, 120 / 5 * 1));
  CHECK(geodesic_divisibility(A("{4,3,3;1,1,2}"), 1, 4));
}
