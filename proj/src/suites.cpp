#include "dtg/suites.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "dtg/automorphism.hpp"
#include "dtg/cover.hpp"
#include "dtg/datapack.hpp"
#include "dtg/drg.hpp"
#include "dtg/error.hpp"
#include "dtg/families.hpp"
#include "dtg/formed_space.hpp"
#include "dtg/golay.hpp"
#include "dtg/transitivity.hpp"
#include "dtg/witnesses.hpp"

namespace dtg {

namespace {

json array_json(const Graph& g) {
  auto r = intersection_array(g);
  return r.ok() ? json(r.array->str()) : json(r.reason);
}

std::vector<uint64_t> sorted_subdegrees(const PermGroup& g, Point base = 0) {
  auto s = subdegrees(orbitals(g, base));
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<uint64_t> bfs_sphere_sizes(const Graph& g, Vertex u) {
  std::vector<uint64_t> out;
  for (const auto& lvl : distance_partition(g, u).levels) out.push_back(lvl.size());
  return out;
}

std::string fam_label(const std::string& f, const std::string& p) { return p.empty() ? f : f + "(" + p + ")"; }

Built fam(const std::string& f, const std::string& p) { return build_family(parse_family(f, p)); }

Params P(std::initializer_list<std::pair<const std::string, int64_t>> l) { return Params(l); }

std::string params_str(const Params& p) {
  std::string s;
  for (const auto& [k, v] : p) s += (s.empty() ? "" : ",") + k + "=" + std::to_string(v);
  return s;
}

// induced action on 3-subsets of the given point group
PermGroup on_three_subsets(const PermGroup& g) {
  int n = g.degree();
  std::map<std::array<int, 3>, int> idx;
  std::vector<std::array<int, 3>> sets;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        idx[{a, b, c}] = static_cast<int>(sets.size());
        sets.push_back({a, b, c});
      }
  std::vector<Perm> gens;
  for (const auto& x : g.generators()) {
    std::vector<Point> img(sets.size());
    for (size_t i = 0; i < sets.size(); ++i) {
      std::array<int, 3> t{x[sets[i][0]], x[sets[i][1]], x[sets[i][2]]};
      std::sort(t.begin(), t.end());
      img[i] = idx.at(t);
    }
    gens.emplace_back(img);
  }
  return PermGroup(static_cast<int>(sets.size()), gens);
}

RankFourOracle oracle_of(const PermGroup& g) {
  RankFourOracle o;
  o.degree = static_cast<uint64_t>(g.degree());
  o.group_order = g.order();
  o.subdegrees = sorted_subdegrees(g);
  return o;
}

}  // namespace

std::optional<RankFourOracle> rank_four_oracle(int row, const Params& p) {
  auto get = [&](const std::string& k) {
    auto it = p.find(k);
    if (it == p.end()) throw Error("row " + std::to_string(row) + " needs parameter " + k);
    return static_cast<int>(it->second);
  };
  uint64_t seed = default_seed();
  auto polar = [&](const FormedSpace& s) {
    auto set = totally_isotropic_subspaces(s, 3);
    if (set.spaces.size() > static_cast<size_t>(kMaxFamilyVertices)) throw Error("beyond the 5000-point cap");
    return oracle_of(subspace_action(s, set, isometry_generators(s, seed)).group());
  };
  switch (row) {
    case 1:
    case 2: {
      int n = get("n");
      if (n < 5 || n > 32) throw Error("n out of the supported range 5..32");
      auto base = row == 1 ? PermGroup::alternating(n) : PermGroup::symmetric(n);
      return oracle_of(on_three_subsets(base));
    }
    case 22: {
      int n = get("n"), q = get("q");
      auto b = fam("grassmann", "n=" + std::to_string(n) + ",q=" + std::to_string(q) + ",k=3");
      return oracle_of(*b.group);
    }
    case 40:
      return polar(FormedSpace::symplectic(6, get("q")));
    case 56:
      return polar(FormedSpace::orthogonal(7, get("q"), "circle"));
    case 44:
      return polar(FormedSpace::unitary(6, get("q")));
    case 45:
      return polar(FormedSpace::unitary(7, get("q")));
    case 46:
    case 47: {
      auto s = FormedSpace::unitary(get("n"), row == 46 ? 3 : 4);
      auto pts = enumerate_points(s);
      if (pts.points.size() > static_cast<size_t>(kMaxFamilyVertices)) throw Error("beyond the 5000-point cap");
      return oracle_of(point_action(s, pts, isometry_generators(s, seed)).group());
    }
    default:
      return std::nullopt;
  }
}

void rank_four_case(Report& r, int row, const Params& p) {
  std::string id = "row" + std::to_string(row) + "/" + params_str(p);
  std::string loc = "rank-4 subdegree formula, row " + std::to_string(row);
  run_case(r, id, loc, [&] {
    RankFourRow f;
    try {
      f = rank_four_row(row, p);
    } catch (const NonIntegerResult& e) {
      r.add({id, loc, Status::Warn, nullptr, nullptr, "stated", std::string("formula: ") + e.what(), 0});
      return;
    }
    if (f.degree() > kMaxFamilyVertices) {
      r.skip(id, loc, "formula degree " + std::to_string(f.degree()) + " is beyond the 5000-point cap");
      return;
    }
    auto o = rank_four_oracle(row, p);
    if (!o) {
      r.skip(id, loc, "no brute-force oracle for this row");
      return;
    }
    std::vector<uint64_t> formula(f.terms.begin(), f.terms.end());
    formula.push_back(1);
    std::sort(formula.begin(), formula.end());
    auto& c = r.check(id, loc, o->subdegrees, formula, "stated", true);
    c.note = f.group + " on " + std::to_string(o->degree) + " points, |G| = " + std::to_string(o->group_order);
    if (c.status == Status::Warn) {
      uint64_t sum = 1;
      for (auto t : f.terms) sum += static_cast<uint64_t>(t);
      c.note += "; formula sums to " + std::to_string(sum) + ", enumeration has " + std::to_string(o->degree) + " points";
    }
  });
}

Report suite_field_tables() { return verify_field_tables(); }

Report suite_lemmas() {
  Report r = verify_field_tables();
  r.suite = "lemmas";
  r.merge(verify_witnesses());
  return r;
}

Report suite_unitary63() {
  Report r;
  r.suite = "unitary63";
  const std::string loc = "63-vertex graph on non-isotropic points of the GF(9) Hermitian 3-space";
  run_case(r, "u63", loc, [&] {
    auto b = fam("unitary", "n=3,q=3,delta=1");
    const Graph& g = b.graph;
    r.check("u63/vertices", loc, g.n(), 63);
    auto aut = automorphism_group(g);
    r.check("u63/aut-order", loc, aut.order, 12096);
    auto ag = aut.group();
    r.check("u63/subdegrees", loc, sorted_subdegrees(ag), json::array({1, 6, 24, 32}));
    auto dt = is_distance_transitive(g, ag);
    r.check("u63/distance-transitive", loc, dt.ok, true).note = dt.reason;
    r.check("u63/diameter", loc, diameter(g), 3);
    r.check("u63/array", loc, array_json(g), "{6,4,4;1,1,3}");
  });
  return r;
}

Report suite_unitary208() {
  Report r;
  r.suite = "unitary208";
  const std::string loc = "208-vertex graph on non-isotropic points of the GF(16) Hermitian 3-space";
  run_case(r, "u208", loc, [&] {
    auto b = fam("unitary", "n=3,q=4,delta=1");
    const Graph& g = b.graph;
    r.check("u208/vertices", loc, g.n(), 208);
    r.check("u208/valency", loc, g.valency() ? json(*g.valency()) : json("irregular"), 12);
    auto aut = automorphism_group(g);
    auto ag = aut.group();
    r.check("u208/aut-order", loc, aut.order, 249600, "derived");
    auto dt = is_distance_transitive(g, ag);
    r.check("u208/distance-transitive", loc, dt.ok, true).note = dt.reason;
    r.check("u208/diameter", loc, diameter(g), 3);
    auto arr = require_intersection_array(g);
    auto spheres = sphere_sizes(arr);
    r.check("u208/spheres-from-array", loc, spheres, bfs_sphere_sizes(g, 0), "derived");
    r.check("u208/sphere-total", loc, std::accumulate(spheres.begin(), spheres.end(), uint64_t{0}), 208);
    bool ident = true;
    for (int i = 1; i < arr.d(); ++i)
      ident = ident && spheres[i] * static_cast<uint64_t>(arr.b(i)) == spheres[i + 1] * static_cast<uint64_t>(arr.c(i + 1));
    r.check("u208/sphere-identity", loc, ident, true, "derived");
    r.check("u208/middle-sphere", loc, middle_sphere_inequality(arr), true, "derived");
    std::vector<uint64_t> nontriv(spheres.begin() + 1, spheres.end());
    std::sort(nontriv.begin(), nontriv.end());
    r.check("u208/sphere-set", loc, nontriv, json::array({12, 75, 120}));
    auto sub = sorted_subdegrees(ag);
    r.check("u208/subdegrees", loc, sub, json::array({1, 12, 75, 120}));
    r.check("u208/printed-array", loc, arr.str(), "{12,10,3;1,1,8}", "stated", true).note =
        "the printed array gives non-integral sphere sizes; the enumerated one is reported";
  });
  return r;
}

Report suite_frames63() {
  Report r;
  r.suite = "frames63";
  const std::string loc = "second 63-vertex graph (orthonormal frames) versus the point graph";
  Built second;
  try {
    second = frames63_graph(default_seed());
  } catch (const std::exception& e) {
    r.skip("frames63/noniso", loc, std::string("second graph unavailable: ") + e.what());
    return r;
  }
  run_case(r, "frames63", loc, [&] {
    Graph first = fam("unitary", "n=3,q=3,delta=1").graph;
    const Graph& g = second.graph;
    r.check("frames63/vertices", loc, g.n(), 63);
    r.check("frames63/array", loc, array_json(g), "{6,4,4;1,1,3}", "derived");
    auto aut = automorphism_group(g);
    r.check("frames63/aut-order", loc, aut.order, 12096, "derived");
    auto dt = is_distance_transitive(g, aut.group());
    r.check("frames63/distance-transitive", loc, dt.ok, true, "derived");
    auto iso = find_isomorphism(first, g);
    auto& c = r.check("frames63/noniso", loc, !iso.has_value(), true);
    c.note = "girth " + std::to_string(girth(first).value_or(0)) + " vs " + std::to_string(girth(g).value_or(0)) +
             "; " + second.note;
  });
  return r;
}

Report suite_golay(const SuiteOptions& opt) {
  Report r;
  r.suite = "golay";
  run_case(r, "golay/generators", "Golay generator words", [&] {
    auto a12 = golay_c12_permutations();
    auto a22 = golay_c22_permutations();
    bool comm = true, orders = true;
    for (const auto& x : a12) {
      orders = orders && x.order() == 3;
      for (const auto& y : a12) comm = comm && x * y == y * x;
    }
    for (const auto& x : a22) {
      orders = orders && x.order() == 2;
      for (const auto& y : a22) comm = comm && x * y == y * x;
    }
    r.check("golay/generators-commute", "Golay generator words", comm, true, "derived");
    r.check("golay/generator-orders", "Golay generator words", orders, true, "derived");
  });
  run_case(r, "golay/c12", "ternary Golay Cayley graph on Z_3^6", [&] {
    const std::string loc = "ternary Golay Cayley graph on Z_3^6";
    Graph g = golay_c12();
    r.check("golay/c12-vertices", loc, g.n(), 729);
    r.check("golay/c12-valency", loc, g.valency().value_or(-1), 24);
    r.check("golay/c12-array", loc, array_json(g), "{24,22,20;1,2,12}");
    Graph d2 = distance_i_graph(g, 2);
    auto res = intersection_array(d2);
    auto& c = r.check("golay/c12-d2-distance-transitive", "distance-2 graph of the ternary Golay graph",
                      res.ok(), false);
    c.note = res.ok() ? "distance-regular" : "not distance-regular, hence not distance transitive";
    if (res.violation) c.note += " (" + res.violation->str() + ")";
  });
  run_case(r, "golay/c22", "Golay Cayley graph on Z_2^10", [&] {
    const std::string loc = "Golay Cayley graph on Z_2^10";
    Graph g = golay_c22();
    r.check("golay/c22-vertices", loc, g.n(), 1024);
    r.check("golay/c22-valency", loc, g.valency().value_or(-1), 22);
    r.check("golay/c22-array", loc, array_json(g), "{22,21,20;1,2,6}");
    r.check("golay/c22-d2-array", "distance-2 graph of the Z_2^10 Golay graph", array_json(distance_i_graph(g, 2)),
            "{231,160,6;1,48,210}");
    if (opt.deep) {
      auto aut = automorphism_group(g, 50'000'000);
      r.check("golay/c22-aut-order", loc, aut.order, aut.order, "derived").note = factor_string(aut.order);
    }
  });
  auto pack = opt.data_pack ? locate_data_pack(*opt.data_pack) : locate_data_pack();
  if (!pack) {
    r.skip("golay/c23-d2-array", "distance-2 graph of the binary Golay coset graph", "data pack missing");
  } else {
    run_case(r, "golay/c23", "binary Golay coset graph (data pack)", [&] {
      const std::string loc = "binary Golay coset graph (data pack)";
      auto lg = load_data_pack(*pack, "golay-c23");
      r.check("golay/c23-vertices", loc, lg.graph.n(), 2048);
      r.check("golay/c23-valency", loc, lg.graph.valency().value_or(-1), 23);
      r.check("golay/c23-d2-array", "distance-2 graph of the binary Golay coset graph",
              array_json(distance_i_graph(lg.graph, 2)), "{253,210,3;1,30,231}");
      if (opt.deep) {
        auto aut = automorphism_group(lg.graph, 50'000'000);
        r.check("golay/c23-aut-order", loc, aut.order, 2048ULL * 10200960ULL).note = factor_string(aut.order);
      }
    });
  }
  return r;
}

Report suite_rank4(const SuiteOptions& opt) {
  Report r;
  r.suite = "rank4";
  if (opt.row) {
    auto sets = opt.row_params;
    if (sets.empty()) sets.push_back({});
    for (const auto& p : sets) rank_four_case(r, *opt.row, p);
    return r;
  }
  for (int row : {1, 2})
    for (int n = 7; n <= 10; ++n) rank_four_case(r, row, P({{"n", n}}));
  rank_four_case(r, 22, P({{"n", 6}, {"q", 2}}));
  rank_four_case(r, 40, P({{"q", 2}}));
  rank_four_case(r, 40, P({{"q", 3}}));
  rank_four_case(r, 44, P({{"q", 2}}));
  rank_four_case(r, 45, P({{"q", 2}}));
  rank_four_case(r, 46, P({{"n", 3}}));
  rank_four_case(r, 46, P({{"n", 4}}));
  rank_four_case(r, 47, P({{"n", 3}}));
  rank_four_case(r, 56, P({{"q", 3}}));
  return r;
}

namespace {

struct Gt3Entry {
  std::string id, family, params;
  int girth_class;  // 0 when the graph is not in a girth class
};

const std::vector<Gt3Entry>& gt3_entries() {
  static const std::vector<Gt3Entry> e = {
      {"C6", "cycle", "n=6", 6},
      {"C7", "cycle", "n=7", 7},
      {"H(3,2)", "hamming", "d=3,n=2", 0},
      {"H(3,3)", "hamming", "d=3,n=3", 0},
      {"H(3,4)", "hamming", "d=3,n=4", 0},
      {"J(6,3)", "johnson", "n=6,k=3", 0},
      {"J(7,3)", "johnson", "n=7,k=3", 0},
      {"J(8,3)", "johnson", "n=8,k=3", 0},
      {"O3", "odd", "k=3", 6},
      {"B(PG(2,2))", "pg-incidence", "dim=2,q=2", 6},
      {"B(PG(2,3))", "pg-incidence", "dim=2,q=3", 6},
      {"B(PG(2,4))", "pg-incidence", "dim=2,q=4", 6},
      {"cube", "cube", "d=3", 0},
      {"G42", "g42", "", 5},
      {"Sylvester", "sylvester", "", 5},
      {"Perkel", "perkel", "", 5},
      {"M23", "m23", "", 5},
  };
  return e;
}

}  // namespace

Report suite_gt3(const SuiteOptions&) {
  Report r;
  r.suite = "gt3";
  std::map<int, std::vector<std::string>> classes;
  for (const auto& e : gt3_entries()) {
    std::string loc = "diameter-3 distance-transitive graph " + e.id;
    std::string id = "gt3/" + e.id;
    run_case(r, id, loc, [&] {
      Graph g = fam(e.family, e.params).graph;
      bool conn = is_connected(g);
      r.check(id + "/connected", loc, conn, true);
      if (!conn) return;
      r.check(id + "/diameter", loc, diameter(g), 3);
      auto arr = require_intersection_array(g);
      auto gg = girth(g);
      auto ga = girth_from_array(arr);
      auto& c = r.check(id + "/girth", loc, gg ? json(*gg) : json("inf"), ga ? json(*ga) : json("inf"), "derived");
      c.note = arr.str();
      auto aut = automorphism_group(g);
      auto dt = is_distance_transitive(g, aut.group());
      r.check(id + "/distance-transitive", loc, dt.ok, true).note = "|Aut| = " + std::to_string(aut.order);
      if (e.girth_class && gg && *gg == e.girth_class) classes[e.girth_class].push_back(e.id);
      if (e.girth_class && gg) classes[-1].push_back(e.id + ":" + std::to_string(*gg));
    });
  }
  const std::map<int, std::vector<std::string>> expected = {
      {5, {"G42", "Sylvester", "Perkel", "M23"}},
      {6, {"C6", "O3", "B(PG(2,2))", "B(PG(2,3))", "B(PG(2,4))"}},
      {7, {"C7"}},
  };
  for (const auto& [gclass, names] : expected)
    r.check("gt3/girth-" + std::to_string(gclass) + "-class", "girth classes of the diameter-3 geodesic-transitive graphs",
            classes[gclass], names);
  return r;
}

Report suite_covers(const SuiteOptions&) {
  Report r;
  r.suite = "covers";
  const std::string loc6 = "girth-7 covers of girth-6 quotients";
  run_case(r, "covers/O3-chain", loc6, [&] {
    Graph o3 = odd_graph(3);
    auto fc = girth7_forcing_chain(o3);
    r.check("covers/O3-valency", loc6, fc.k, 4);
    for (const auto& s : fc.steps) {
      json expected = s.i < 3 ? json::array({0, 3, 1}) : json::array({1, 2, 1});
      r.check("covers/O3-abc" + std::to_string(s.i), loc6, json::array({s.a, s.b, s.c}), expected,
              s.i < 3 ? "derived" : "stated")
          .note = s.why;
    }
    r.check("covers/O3-c3-lower-bound", loc6, fc.c3_sigma_lower, 3, "derived");
    r.check("covers/O3-c3", loc6, fc.c3_sigma, 2);
    r.check("covers/O3-contradiction", loc6, fc.contradiction(), true);
  });
  run_case(r, "covers/C6", loc6, [&] {
    Graph c7 = cycle_graph(7);
    r.check("covers/C6-cover-is-C7-diameter", loc6, diameter(c7), 3, "derived");
    r.check("covers/C6-no-4-geodesics", loc6, diameter(c7) < 4, true, "derived").note = "a 4-geodesic needs diameter >= 4";
  });
  run_case(r, "covers/BPG", loc6, [&] {
    for (int q : {2, 3, 4}) {
      Graph b = pg_incidence(2, q);
      r.check("covers/BPG" + std::to_string(q) + "-bipartite", loc6, is_bipartite(b).bipartite, true, "derived")
          .note = "a cover of a bipartite graph is bipartite, so its girth is even, not 7";
    }
  });

  const std::string loc5 = "stabilizer divisibility t = k(k-1)^2 b3 | |A_B| for girth-5 quotients";
  struct Q {
    std::string id;
    Graph g;
    json stated_ab;
    bool stated_warns;
  };
  std::vector<Q> quots;
  quots.push_back({"G42", g42_graph(), 120, false});
  quots.push_back({"M23", m23_octad_graph(), 20160, false});
  quots.push_back({"Sylvester", sylvester_graph(), 80, true});
  for (const auto& q : quots) {
    std::string id = "covers/" + q.id;
    run_case(r, id, loc5, [&] {
      auto aut = automorphism_group(q.g);
      auto ag = aut.group();
      bool vt = ag.is_transitive();
      r.check(id + "-vertex-transitive", loc5, vt, true, "derived");
      uint64_t ab = aut.order / static_cast<uint64_t>(q.g.n());
      auto& c = r.check(id + "-aut-block", loc5, ab, q.stated_ab, "stated", q.stated_warns);
      c.note = "|Aut| = " + std::to_string(aut.order) + " = " + factor_string(aut.order) + ", |A_B| = " + factor_string(ab);
      int k = q.g.valency().value_or(0);
      uint64_t t = stab_t(k, 1);
      // t = k(k-1)^2 b3 is a multiple of k(k-1)^2, so b3 = 1 decides every b3
      r.check(id + "-refuted", loc5, !stab_divisibility(k, 1, ab), true).note =
          "k(k-1)^2 = " + std::to_string(t) + " does not divide " + std::to_string(ab);
    });
  }
  run_case(r, "covers/Perkel", loc5, [&] {
    auto pk = perkel_graph(default_seed());
    const Graph& g = pk.built.graph;
    auto aut = automorphism_group(g);
    uint64_t ab = aut.order / static_cast<uint64_t>(g.n());
    r.check("covers/Perkel-aut-block", loc5, ab, 60).note = "|Aut| = " + std::to_string(aut.order);
    int k = g.valency().value_or(0);
    r.check("covers/Perkel-refuted", loc5, !stab_divisibility(k, 1, ab), true).note =
        "k(k-1)^2 = " + std::to_string(stab_t(k, 1)) + " does not divide " + std::to_string(ab);
  });
  run_case(r, "covers/stab-examples", "divisibility helper", [&] {
    r.check("covers/stab-6-1-120", "divisibility helper", stab_divisibility(6, 1, 120), false);
    r.check("covers/stab-15-1-20160", "divisibility helper", stab_divisibility(15, 1, 20160), false);
    r.check("covers/stab-3-1-12", "divisibility helper", stab_divisibility(3, 1, 12), true, "trivial");
  });
  run_case(r, "covers/hypothesis", "hypothesis check on known covers", [&] {
    // C12 over C6, cube over K4: both covers, both fail the hypothesis
    Graph c12 = cycle_graph(12);
    std::vector<std::vector<Vertex>> pairs;
    for (int i = 0; i < 6; ++i) pairs.push_back({i, i + 6});
    auto p = VertexPartition::from_blocks(12, pairs);
    auto h = check_hypothesis(c12, quotient(c12, p), p);
    r.check("covers/hypothesis-C12", "hypothesis check on known covers",
            json::array({is_cover(c12, p).ok, !h.has_fail()}), json::array({true, false}), "trivial");
    Graph cube = hamming_graph(3, 2);
    std::vector<std::vector<Vertex>> anti;
    for (int i = 0; i < 4; ++i) anti.push_back({i, 7 - i});
    auto pc = VertexPartition::from_blocks(8, anti);
    auto hc = check_hypothesis(cube, quotient(cube, pc), pc);
    r.check("covers/hypothesis-cube", "hypothesis check on known covers",
            json::array({is_cover(cube, pc).ok, !hc.has_fail()}), json::array({true, false}), "trivial");
  });
  return r;
}

Report suite_properties(const SuiteOptions&) {
  Report r;
  r.suite = "properties";
  const std::vector<std::pair<std::string, std::string>> corpus = {
      {"cycle", "n=6"}, {"cycle", "n=7"}, {"cycle", "n=12"}, {"path", "n=5"}, {"cube", "d=3"},
      {"hamming", "d=3,n=3"}, {"johnson", "n=6,k=3"}, {"johnson", "n=7,k=3"}, {"odd", "k=3"}, {"petersen", ""},
      {"pg-incidence", "dim=2,q=2"}, {"pg-incidence", "dim=2,q=3"}, {"pg-incidence", "dim=3,q=2"},
      {"complete-multipartite", "m=3,b=2"}, {"complete", "n=5"}, {"hoffman-singleton", ""}, {"g42", ""},
      {"sylvester", ""}, {"perkel", ""}, {"unitary", "n=3,q=3,delta=1"}, {"frames63", ""}, {"dual-polar", "q=2"},
      {"grassmann", "n=4,q=2,k=2"},
  };
  std::mt19937_64 rng(default_seed());
  const std::string locA = "sphere identity, middle-sphere inequality and girth from the array";
  const std::string locB = "bipartite graphs have a disconnected distance-2 graph";
  const std::string locC = "antipodal diameter-3 graphs cover a complete quotient";
  const std::string locD = "orbital graphs all connected iff the action is primitive";
  const std::string locE = "invariants survive a random relabelling";
  for (const auto& [f, p] : corpus) {
    std::string name = fam_label(f, p);
    std::string id = "prop/" + name;
    run_case(r, id, locA, [&] {
      Built b = fam(f, p);
      const Graph& g = b.graph;
      auto res = intersection_array(g);
      if (res.ok()) {
        const auto& arr = *res.array;
        auto spheres = sphere_sizes(arr);
        bool ident = true;
        for (int i = 1; i < arr.d(); ++i)
          ident = ident && spheres[i] * static_cast<uint64_t>(arr.b(i)) == spheres[i + 1] * static_cast<uint64_t>(arr.c(i + 1));
        bool bfs = true;
        for (Vertex u = 0; u < g.n(); u += std::max(1, g.n() / 7)) bfs = bfs && bfs_sphere_sizes(g, u) == spheres;
        r.check(id + "/sphere-identity", locA, ident && bfs, true, "derived");
        auto gg = girth(g);
        auto ga = girth_from_array(arr);
        r.check(id + "/girth", locA, gg ? json(*gg) : json("inf"), ga ? json(*ga) : json("inf"), "derived");
        if (arr.d() == 3) {
          auto aut = automorphism_group(g);
          if (is_distance_transitive(g, aut.group()).ok)
            r.check(id + "/middle-sphere", locA, middle_sphere_inequality(arr), true, "stated", true).note =
                "sphere sizes " + json(spheres).dump();
        }
        auto imp = classify_imprimitive(g, arr);
        if (imp.antipodal && arr.d() == 3) {
          auto part = VertexPartition::from_blocks(g.n(), imp.classes);
          auto cov = is_cover(g, part);
          Graph qg = quotient(g, part);
          int nq = qg.n();
          bool complete = static_cast<int>(qg.m()) == nq * (nq - 1) / 2;
          r.check(id + "/antipodal-cover", locC, json::array({cov.ok, complete}), json::array({true, true}), "derived")
              .note = "quotient on " + std::to_string(nq) + " blocks";
        }
        // relabel and recompute
        std::vector<Point> perm(g.n());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> e;
        for (const auto& [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
        Graph h(g.n(), e);
        auto rh = intersection_array(h);
        r.check(id + "/relabel", locE, json::array({rh.ok() ? rh.array->str() : rh.reason, girth(h).value_or(0)}),
                json::array({arr.str(), girth(g).value_or(0)}), "derived");
      } else {
        r.check(id + "/distance-regular", locA, false, f != "path", "trivial").note =
            res.violation ? res.violation->str() : res.reason;
      }
      if (is_bipartite(g).bipartite && g.n() > 2)
        r.check(id + "/bipartite-d2", locB, is_connected(distance_i_graph(g, 2)), false, "derived");
      std::vector<PermGroup> actions;
      if (b.group) actions.push_back(*b.group);
      if (g.n() <= 500) actions.push_back(automorphism_group(g).group());
      for (size_t a = 0; a < actions.size(); ++a) {
        const auto& G = actions[a];
        if (G.degree() > 500 || !G.is_transitive()) continue;
        bool primitive = block_systems(G).empty();
        bool all_conn = true;
        for (const auto& s : orbitals(G, 0)) {
          if (s.index == 0) continue;
          // non-self-paired suborbits: use the undirected union through the paired one
          std::vector<Edge> e;
          StabChain ch = G.chain_with_base({0});
          for (Point x = 0; x < G.degree(); ++x) {
            Perm t = ch.transversal(0, x);
            for (Point y : s.points) e.emplace_back(x, t[y]);
          }
          all_conn = all_conn && is_connected(Graph(G.degree(), e));
        }
        r.check(id + "/orbital-primitivity-" + (a == 0 && b.group ? std::string("construction") : "aut"), locD,
                all_conn, primitive, "derived")
            .note = primitive ? "primitive" : "imprimitive";
      }
    });
  }
  return r;
}

std::vector<std::string> suite_names() { return {"tables", "rank4", "lemmas", "golay", "covers", "properties", "all"}; }

Report run_suite(const std::string& name, const SuiteOptions& opt) {
  Report r;
  r.suite = name;
  auto tables = [&] {
    r.merge(suite_gt3(opt));
    r.merge(suite_unitary63());
    r.merge(suite_unitary208());
    r.merge(suite_frames63());
  };
  if (name == "tables") {
    tables();
  } else if (name == "rank4") {
    r.merge(suite_rank4(opt));
  } else if (name == "lemmas") {
    r.merge(suite_lemmas());
  } else if (name == "golay") {
    r.merge(suite_golay(opt));
  } else if (name == "covers") {
    r.merge(suite_covers(opt));
  } else if (name == "properties") {
    r.merge(suite_properties(opt));
  } else if (name == "all") {
    r.merge(suite_lemmas());
    tables();
    r.merge(suite_golay(opt));
    r.merge(suite_rank4(opt));
    r.merge(suite_covers(opt));
    r.merge(suite_properties(opt));
  } else {
    throw Error("unknown suite '" + name + "'");
  }
  return r;
}

}  // namespace dtg
