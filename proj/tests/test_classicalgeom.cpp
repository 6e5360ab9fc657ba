#include <random>
#include <set>

#include "doctest.h"
#include "dtg/error.hpp"
#include "dtg/field.hpp"
#include "dtg/formed_space.hpp"
#include "dtg/formulas.hpp"
#include "dtg/witnesses.hpp"

using namespace dtg;

namespace {

// all nonzero vectors of GF(q)^n, by odometer
template <class F>
void each_vector(int q, int n, F&& f) {
  Vec v(n, 0);
  while (true) {
    int i = 0;
    while (i < n && ++v[i] == q) v[i++] = 0;
    if (i == n) return;
    f(v);
  }
}

}  // namespace

TEST_CASE("field axioms by exhaustion") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) {
    const Field& F = Field::get(q);
    CAPTURE(q);
    for (int a = 0; a < q; ++a) {
      CHECK(F.add(a, 0) == a);
      CHECK(F.mul(a, 1) == a);
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a) CHECK(F.mul(a, F.inv(a)) == 1);
      CHECK(F.pow(a, q) == a);
      for (int b = 0; b < q; ++b) {
        CHECK(F.mul(a, b) == F.mul(b, a));
        for (int c = 0; c < q; c += 3) {
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
          CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
        }
      }
    }
    // primitive element generates the multiplicative group
    std::set<int> seen;
    for (int e = 0; e < q - 1; ++e) seen.insert(F.pow(F.primitive(), e));
    CHECK(seen.size() == static_cast<size_t>(q - 1));
  }
}

TEST_CASE("field conventions and notation") {
  CHECK(Field::get(9).modulus() == std::vector<int>{1, 0, 1});
  CHECK(Field::get(16).modulus() == std::vector<int>{1, 1, 0, 0, 1});
  const Field& F = Field::get(9);
  int x = 3;  // the class of x
  CHECK(F.mul(x, x) == F.from_int(-1));
  CHECK(F.poly_str(F.add(1, F.mul(2, x))) == "1+2x");
  for (int a = 0; a < 9; ++a) CHECK(F.parse(F.poly_str(a)) == a);
  // x has order 4 in GF(9), so power notation covers only 0 and <x>
  CHECK(F.parse(F.power_str(x)) == x);
  CHECK_THROWS_AS(F.power_str(F.add(1, x)), Error);
  const Field& G = Field::get(16);
  for (int q : {4, 16}) {
    const Field& H = Field::get(q);
    for (int a = 0; a < q; ++a) CHECK(H.parse(H.power_str(a)) == a);
  }
  CHECK(G.parse("λ^4") == G.parse("x+1"));
  for (int a = 1; a < 16; ++a) CHECK(G.pow(G.primitive(), G.log(a)) == a);
  CHECK(G.frob(G.primitive(), 4) == G.primitive());
  CHECK_THROWS_AS(Field::get(6), Error);
  CHECK_THROWS_AS(F.parse("2y"), Error);
  int p = 0, f = 0;
  CHECK(is_prime_power(81, &p, &f));
  CHECK((p == 3 && f == 4));
  CHECK_FALSE(is_prime_power(12));
}

TEST_CASE("linear algebra: rank plus nullity") {
  const Field& F = Field::get(5);
  Mat m{{1, 2, 3, 4}, {2, 4, 1, 3}, {3, 1, 4, 2}};
  int rk = rank(F, m);
  Mat ns = nullspace(F, m);
  CHECK(rk + static_cast<int>(ns.size()) == 4);
  for (const auto& v : ns)
    for (const auto& row : m) {
      int s = 0;
      for (int i = 0; i < 4; ++i) s = F.add(s, F.mul(row[i], v[i]));
      CHECK(s == 0);
    }
}

TEST_CASE("gaussian binomials agree with subspace enumeration") {
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(3, 1, 3) == 13);
  for (auto [n, k, q] : {std::array{4, 2, 2}, std::array{4, 2, 3}, std::array{5, 2, 2}, std::array{3, 1, 4}})
    CHECK(static_cast<int64_t>(enumerate_subspaces(Field::get(q), n, k).spaces.size()) == gaussian_binomial(n, k, q));
  CHECK(count_formula("gaussian", {{"m", 6}, {"k", 3}, {"q", 2}}) == 1395);
}

TEST_CASE("non-isotropic point counts against exhaustive vectors") {
  for (auto [n, q] : {std::pair{3, 3}, std::pair{3, 4}, std::pair{3, 2}, std::pair{4, 2}}) {
    auto s = FormedSpace::unitary(n, q);
    int Q = q * q;
    int64_t nonzero = 0;
    each_vector(Q, n, [&](const Vec& v) { nonzero += s.beta(v, v) != 0; });
    CHECK(static_cast<int64_t>(enumerate_points(s).points.size()) == nonzero / (Q - 1));
  }
  CHECK(enumerate_points(FormedSpace::unitary(3, 3)).points.size() == 63);
  CHECK(enumerate_points(FormedSpace::unitary(3, 4)).points.size() == 208);
}

TEST_CASE("forms are sesquilinear and Hermitian") {
  auto s = FormedSpace::unitary(3, 3);
  const Field& F = s.field();
  std::mt19937 rng(7);
  auto rv = [&] { return Vec{int(rng() % 9), int(rng() % 9), int(rng() % 9)}; };
  for (int t = 0; t < 200; ++t) {
    Vec u = rv(), v = rv(), w = rv();
    int k = static_cast<int>(rng() % 9);
    CHECK(s.beta(s.add(u, v), w) == F.add(s.beta(u, w), s.beta(v, w)));
    CHECK(s.beta(s.scale(k, u), w) == F.mul(k, s.beta(u, w)));
    CHECK(s.beta(u, w) == F.frob(s.beta(w, u)));
  }
  auto o = FormedSpace::orthogonal(5, 3, "circle");
  const Field& G = o.field();
  each_vector(3, 5, [&](const Vec& v) {
    // beta(v,v) = 2Q(v)
    CHECK(o.beta(v, v) == G.mul(2, o.Q(v)));
  });
}

TEST_CASE("vector notation round trip") {
  auto s = FormedSpace::unitary(3, 3);
  for (const auto& v : enumerate_points(s).points) CHECK(s.parse_vector(s.vector_str(v)) == v);
  CHECK(FormedSpace::parse("unitary:n=3,q=4").spec() == FormedSpace::unitary(3, 4).spec());
  CHECK_THROWS_AS(FormedSpace::parse("unitary:n=3"), Error);
}

TEST_CASE("suborbit classes partition the other points") {
  auto s = FormedSpace::unitary(3, 3);
  auto p = enumerate_points(s);
  std::map<int, int> cnt;
  for (size_t j = 1; j < p.points.size(); ++j) {
    int a = suborbit_of(s, p.points[0], p.points[j]);
    CHECK(a == suborbit_of(s, p.points[j], p.points[0]));
    ++cnt[a];
  }
  std::vector<int> sizes;
  for (auto [k, v] : cnt) sizes.push_back(v);
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{6, 24, 32});
  CHECK(geometric_orbital_graph(s, p, 1).valency() == 6);
}

TEST_CASE("isometry generators preserve the form and act on points") {
  for (const char* spec : {"unitary:n=3,q=3", "symplectic:n=4,q=3", "orthogonal:n=5,q=3,type=circle"}) {
    auto s = FormedSpace::parse(spec);
    auto gens = isometry_generators(s, 11);
    REQUIRE_FALSE(gens.empty());
    for (const auto& g : gens) CHECK(preserves_form(s, g));
  }
  auto s = FormedSpace::unitary(3, 3);
  auto p = enumerate_points(s);
  auto act = point_action(s, p, isometry_generators(s, 11));
  CHECK(act.group().is_transitive());
}

TEST_CASE("totally isotropic subspace counts") {
  // (q+1)(q^2+1)(q^3+1) for Sp(6,q) and O(7,q); (q+1)(q^3+1)(q^5+1) for U(6,q)
  CHECK(totally_isotropic_subspaces(FormedSpace::symplectic(6, 2), 3).spaces.size() == 135);
  CHECK(totally_isotropic_subspaces(FormedSpace::symplectic(6, 3), 3).spaces.size() == 1120);
  CHECK(totally_isotropic_subspaces(FormedSpace::unitary(6, 2), 3).spaces.size() == 891);
  CHECK(totally_isotropic_subspaces(FormedSpace::orthogonal(7, 3, "circle"), 3).spaces.size() == 1120);
  CHECK_THROWS_AS(FormedSpace::orthogonal(7, 2, "circle"), Error);
}

TEST_CASE("rank-4 table lookups") {
  auto r = rank_four_row(40, {{"q", 3}});
  CHECK(r.degree() == 1120);
  CHECK_THROWS_AS(rank_four_row(0), Error);
  CHECK_THROWS_AS(rank_four_row(kRankFourRows + 1), Error);
  CHECK_THROWS_AS(rank_four_row(40), Error);
  CHECK(rank_four_params(40) == std::vector<std::string>{"q"});
  auto p = parse_params("n=3,sign=-");
  CHECK(p.at("sign") == -1);
  CHECK_THROWS_AS(parse_params("n"), Error);
}

TEST_CASE("printed field tables and lemma witnesses") {
  auto t = verify_field_tables();
  CHECK(t.count(Status::Pass) == 304);
  CHECK_FALSE(t.has_fail());
  auto w = verify_witnesses();
  CHECK_FALSE(w.has_fail());
  CHECK(w.count(Status::Pass) > 100);
}
