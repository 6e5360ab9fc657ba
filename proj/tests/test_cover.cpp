#include "doctest.h"
#include "dtg/automorphism.hpp"
#include "dtg/cover.hpp"
#include "dtg/drg.hpp"
#include "dtg/error.hpp"
#include "dtg/families.hpp"

using namespace dtg;

namespace {

// antipodal pairs of the d-cube: v and v xor (2^d - 1)
VertexPartition cube_pairs(int d) {
  int n = 1 << d;
  std::vector<std::vector<Vertex>> b;
  for (int v = 0; v < n; ++v)
    if (v < (v ^ (n - 1))) b.push_back({v, v ^ (n - 1)});
  return VertexPartition::from_blocks(n, b);
}

}  // namespace

TEST_CASE("partitions validate") {
  CHECK_THROWS_AS(VertexPartition::from_blocks(4, {{0, 1}, {1, 2, 3}}), Error);
  CHECK_THROWS_AS(VertexPartition::from_blocks(4, {{0, 1}}), Error);
  auto p = VertexPartition::from_blocks(4, {{3, 1}, {2, 0}});
  CHECK(p.blocks[0] == std::vector<Vertex>{0, 2});
  CHECK(p.block_of[3] == 1);
  CHECK(VertexPartition::from_blocks(3, {{0}, {1}, {2}}).trivial());
  CHECK(VertexPartition::from_blocks(3, {{0, 1, 2}}).trivial());
}

TEST_CASE("antipodal quotient of the cube is K4") {
  Graph cube = hamming_graph(3, 2);
  auto p = cube_pairs(3);
  CHECK(is_cover(cube, p).ok);
  Graph q = quotient(cube, p);
  CHECK(q.n() == 4);
  CHECK(q.m() == 6);
  auto ci = classify_imprimitive(cube, require_intersection_array(cube));
  CHECK(VertexPartition::from_blocks(8, ci.classes).blocks == p.blocks);
  CHECK_THROWS_WITH_AS(quotient(cube, VertexPartition::from_blocks(8, {{0, 1, 2, 3, 4, 5, 6, 7}})),
                       doctest::Contains("nontrivial"), Error);
}

TEST_CASE("non-covers give a witness") {
  Graph c6 = cycle_graph(6);
  auto p = VertexPartition::from_blocks(6, {{0, 1}, {2, 3}, {4, 5}});
  auto c = is_cover(c6, p);
  CHECK_FALSE(c.ok);
  REQUIRE(c.witness.has_value());
  CHECK_FALSE(c.str().empty());
  CHECK(is_cover(c6, VertexPartition::from_blocks(6, {{0, 3}, {1, 4}, {2, 5}})).ok);
}

TEST_CASE("orbit partitions and normality") {
  Graph c6 = cycle_graph(6);
  PermGroup full = automorphism_group(c6).group();
  PermGroup half(6, {Perm({3, 4, 5, 0, 1, 2})});
  CHECK(normalizes(full, half));
  auto op = orbit_partition(half, 6);
  CHECK(op.size() == 3);
  PermGroup refl(6, {Perm({0, 5, 4, 3, 2, 1})});
  CHECK_FALSE(normalizes(full, refl));
}

TEST_CASE("stabilizer divisibility bound") {
  CHECK(stab_t(3, 2) == 24);
  CHECK(stab_divisibility(3, 2, 48));
  CHECK_FALSE(stab_divisibility(3, 2, 36));
  CHECK(stab_t(5, 2) == 160);
}

TEST_CASE("hypothesis checks on a 2-cover") {
  Graph cube = hamming_graph(3, 2);
  auto p = cube_pairs(3);
  Report r = check_hypothesis(cube, quotient(cube, p), p);
  CHECK(r.has_fail());  // K4 has diameter 1 and the girths are (4,3)
  Graph c14 = cycle_graph(14);
  std::vector<std::vector<Vertex>> b;
  for (int i = 0; i < 7; ++i) b.push_back({i, i + 7});
  auto p14 = VertexPartition::from_blocks(14, b);
  Report r2 = check_hypothesis(c14, quotient(c14, p14), p14);
  CHECK(r2.count(Status::Pass) >= 1);
}

TEST_CASE("forcing chain needs valency at least 4") {
  CHECK_THROWS_WITH_AS(girth7_forcing_chain(pg_incidence(2, 2)), doctest::Contains("valency"), Error);
}

TEST_CASE("girth-7 forcing chain over O3 ends in a contradiction") {
  auto ch = girth7_forcing_chain(odd_graph(3));
  CHECK(ch.k == 4);
  CHECK(ch.c3_sigma == 2);
  CHECK(ch.c3_sigma_lower == 3);
  CHECK(ch.contradiction());
}

TEST_CASE("partition text round trip") {
  auto p = cube_pairs(4);
  auto back = parse_partition(write_partition(p), 16);
  CHECK(back.blocks == p.blocks);
  CHECK_THROWS_AS(parse_partition("0 1\n1 2\n", 3), Error);
  CHECK_THROWS_AS(parse_partition("0 x\n", 2), Error);
}
