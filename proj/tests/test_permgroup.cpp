#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "dtg/error.hpp"
#include "dtg/genfile.hpp"
#include "dtg/permgroup.hpp"
#include "oracles.hpp"

using namespace dtg;

namespace {

Perm cyc(int n, std::vector<std::vector<Point>> c) { return Perm::from_cycles(n, c); }

// S_n acting on k-subsets (colex order)
ActionTable subset_action(int n, int k) {
  std::vector<std::vector<int>> subs;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      subs.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::map<std::vector<int>, int> idx;
  for (size_t i = 0; i < subs.size(); ++i) idx[subs[i]] = static_cast<int>(i);
  ActionTable t;
  t.m = static_cast<int>(subs.size());
  auto sym = PermGroup::symmetric(n);
  for (const auto& g : sym.generators()) {
    std::vector<Point> img(t.m);
    for (int i = 0; i < t.m; ++i) {
      auto s = subs[i];
      for (auto& x : s) x = g[x];
      std::sort(s.begin(), s.end());
      img[i] = idx[s];
    }
    t.gens.emplace_back(img);
  }
  return t;
}

}  // namespace

TEST_CASE("perm basics") {
  Perm a = cyc(5, {{0, 1, 2}});
  Perm b = cyc(5, {{3, 4}});
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.order() == 3);
  CHECK((a * b).order() == 6);
  // right action: apply a then the transposition (0 1)
  Perm t = cyc(5, {{0, 1}});
  CHECK((a * t)[0] == t[a[0]]);
  CHECK(a.cycle_string() == "(0 1 2)");
  CHECK(Perm(4).cycle_string() == "()");
  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 0, 1}), Error);
}

TEST_CASE("orbit") {
  PermGroup g(4, {cyc(4, {{0, 1, 2}})});
  CHECK(g.orbit(0) == std::vector<Point>{0, 1, 2});
  CHECK(g.orbit(3) == std::vector<Point>{3});
  PermGroup id(6, {});
  CHECK(id.orbit(5) == std::vector<Point>{5});
  auto t = subset_action(7, 3);
  CHECK(t.group().orbit(11).size() == 35);
}

TEST_CASE("group order matches closure") {
  CHECK(PermGroup::symmetric(7).order() == 5040);
  CHECK(PermGroup(5, {}).order() == 1);
  CHECK(PermGroup::alternating(6).order() == 360);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 4 + static_cast<int>(rng() % 6);
    std::vector<Perm> gens;
    int ng = 1 + static_cast<int>(rng() % 2);
    for (int j = 0; j < ng; ++j) {
      std::vector<Point> img(n);
      std::iota(img.begin(), img.end(), 0);
      // sparse random perms so some groups are small
      int swaps = 1 + static_cast<int>(rng() % 3);
      for (int s = 0; s < swaps; ++s) std::swap(img[rng() % n], img[rng() % n]);
      gens.emplace_back(img);
    }
    PermGroup g(n, gens);
    size_t c = oracle::closure_size(n, gens);
    REQUIRE(c > 0);
    CHECK(g.order() == c);
  }
  // S7 on 3-subsets: 5040 acting faithfully on 35 points
  auto t = subset_action(7, 3);
  CHECK(t.group().order() == 5040);
  CHECK(oracle::closure_size(t.m, t.gens) == 5040);
}

TEST_CASE("membership") {
  auto s7 = PermGroup::symmetric(7);
  CHECK(s7.contains(cyc(7, {{0, 1, 2}})));
  PermGroup c3(3, {cyc(3, {{0, 1, 2}})});
  CHECK_FALSE(c3.contains(cyc(3, {{0, 1}})));
  auto a5 = PermGroup::alternating(5);
  CHECK(a5.order() == 60);
  CHECK_FALSE(a5.contains(cyc(5, {{1, 3}})));
  CHECK(a5.contains(cyc(5, {{0, 1}, {2, 3}})));
  CHECK_THROWS_AS(a5.contains(Perm(6)), Error);
}

TEST_CASE("point stabilizers") {
  auto s7 = PermGroup::symmetric(7);
  auto h = s7.stabilizer({5, 6});
  CHECK(h.order() == 120);
  for (const auto& g : h.generators()) {
    CHECK(g[5] == 5);
    CHECK(g[6] == 6);
  }
}

TEST_CASE("coset action") {
  auto s4 = PermGroup::symmetric(4);
  auto t = coset_action(s4, s4.stabilizer({3}));
  CHECK(t.m == 4);
  auto g = t.group();
  CHECK(g.order() == 24);
  CHECK(g.is_transitive());

  auto s7 = PermGroup::symmetric(7);
  auto h = s7.stabilizer({5, 6});
  auto t2 = coset_action(s7, h);
  CHECK(t2.m == 42);
  auto g2 = t2.group();
  CHECK(g2.is_transitive());
  CHECK(g2.order() == 5040);
  CHECK(g2.stabilizer({0}).order() == 120);

  PermGroup bogus(7, {cyc(7, {{0, 1}}), cyc(7, {{2, 3, 4}})});
  PermGroup a7 = PermGroup::alternating(7);
  CHECK_THROWS_WITH_AS(coset_action(a7, bogus), doctest::Contains("not a subgroup"), Error);
  PermGroup triv(7, {});
  CHECK_THROWS_WITH_AS(coset_action(s7, triv, 1000), doctest::Contains("index too large"), Error);
}

TEST_CASE("orbitals") {
  auto t = subset_action(7, 3);
  auto sub = orbitals(t.group(), 0);
  CHECK(sub.size() == 4);
  auto d = subdegrees(sub);
  uint64_t sum = 0;
  for (auto x : d) sum += x;
  CHECK(sum == 35);
  auto sorted = d;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<uint64_t>{1, 4, 12, 18});
  for (auto& s : sub) CHECK(s.self_paired());

  PermGroup z7(7, {cyc(7, {{0, 1, 2, 3, 4, 5, 6}})});
  auto zs = orbitals(z7, 0);
  CHECK(zs.size() == 7);
  // {1} pairs with {6}
  for (auto& s : zs) {
    CHECK(s.points.size() == 1);
    Point p = s.points[0];
    CHECK(zs[s.paired].points[0] == (7 - p) % 7);
  }

  PermGroup intr(4, {cyc(4, {{0, 1}})});
  CHECK_THROWS_WITH_AS(orbitals(intr, 0), doctest::Contains("intransitive"), Error);
}

TEST_CASE("block systems") {
  PermGroup z4(4, {cyc(4, {{0, 1, 2, 3}})});
  auto b = block_systems(z4);
  REQUIRE(b.size() == 1);
  CHECK(b[0] == std::vector<std::vector<Point>>{{0, 2}, {1, 3}});

  CHECK(block_systems(subset_action(7, 3).group()).empty());
  CHECK(block_systems(PermGroup::symmetric(5)).empty());

  // D6 on the hexagon: brute force over all set partitions
  PermGroup d6(6, {cyc(6, {{0, 1, 2, 3, 4, 5}}), cyc(6, {{1, 5}, {2, 4}})});
  auto sys = block_systems(d6);
  std::vector<size_t> sizes;
  for (auto& s : sys) sizes.push_back(s[0].size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>{2, 3});

  // oracle: enumerate restricted growth strings
  std::vector<int> rgs(6, 0);
  int invariant_count = 0;
  std::vector<size_t> osizes;
  auto rec = [&](auto&& self, int i, int mx) -> void {
    if (i == 6) {
      if (mx + 1 < 2 || mx + 1 == 6) return;
      for (const auto& g : d6.generators())
        for (int a = 0; a < 6; ++a)
          for (int c = 0; c < 6; ++c)
            if ((rgs[a] == rgs[c]) != (rgs[g[a]] == rgs[g[c]])) return;
      ++invariant_count;
      osizes.push_back(6 / (mx + 1));
      return;
    }
    for (int v = 0; v <= mx + 1; ++v) {
      rgs[i] = v;
      self(self, i + 1, std::max(mx, v));
    }
  };
  rgs[0] = 0;
  rec(rec, 1, 0);
  std::sort(osizes.begin(), osizes.end());
  CHECK(osizes == sizes);  // in D6 every invariant system is minimal
  CHECK(invariant_count == 2);
}

TEST_CASE("generator file round trip") {
  std::string text =
      "# S4\n"
      "degree 4\n"
      "(0 1)\n"
      "img: 1 2 3 0\n"
      "(0, 2)(1, 3)  # commas allowed\n";
  auto f = parse_generators(text);
  CHECK(f.degree == 4);
  REQUIRE(f.gens.size() == 3);
  CHECK(f.gens[1] == cyc(4, {{0, 1, 2, 3}}));
  auto w = write_generators(f.degree, f.gens);
  auto f2 = parse_generators(w);
  CHECK(write_generators(f2.degree, f2.gens) == w);
  CHECK(f2.gens == f.gens);
  CHECK_THROWS_WITH_AS(parse_generators("degree 3\n(0 5)\n"), doctest::Contains("line 2"), Error);
  CHECK_THROWS_AS(parse_generators("(0 1)\n"), Error);
}

TEST_CASE("factor string") {
  CHECK(factor_string(12096) == "2^6·3^3·7");
  CHECK(factor_string(1) == "1");
  CHECK(factor_string(60) == "2^2·3·5");
}
