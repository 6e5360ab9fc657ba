#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <regex>
#include <sstream>

#include "dtg/automorphism.hpp"
#include "dtg/cover.hpp"
#include "dtg/datapack.hpp"
#include "dtg/drg.hpp"
#include "dtg/error.hpp"
#include "dtg/families.hpp"
#include "dtg/genfile.hpp"
#include "dtg/golay.hpp"
#include "dtg/graph.hpp"
#include "dtg/report.hpp"
#include "dtg/suites.hpp"
#include "dtg/transitivity.hpp"

using namespace dtg;

namespace {

// exit codes: 0 ok / property holds, 1 verification FAIL or property fails, 2 usage or environment error
constexpr int kExitFail = 1;
constexpr int kExitEnv = 2;

void emit_graph(const Graph& g, const std::string& out) {
  if (out.empty() || out == "-")
    std::cout << write_graph(g);
  else
    write_graph_file(out, g);
}

// "Z5^1:1;4" -> Cay(Z_5, {1,4}); coordinates separated by commas
Graph cayley_from_spec(const std::string& spec) {
  if (spec == "golay-c12") return golay_c12();
  if (spec == "golay-c22") return golay_c22();
  if (spec == "golay-c23") return golay_c23_coset_graph();
  std::smatch m;
  static const std::regex re(R"(Z(\d+)\^(\d+):(.*))");
  if (!std::regex_match(spec, m, re))
    throw Error("cayley spec must be golay-c12, golay-c22, golay-c23 or Zp^r:s1;s2;... (got '" + spec + "')");
  int p = std::stoi(m[1]), r = std::stoi(m[2]);
  std::vector<std::vector<int>> S;
  std::stringstream ss(m[3].str());
  std::string elt;
  while (std::getline(ss, elt, ';')) {
    if (elt.empty()) continue;
    std::vector<int> v;
    std::stringstream es(elt);
    std::string c;
    while (std::getline(es, c, ',')) v.push_back(std::stoi(c));
    if (static_cast<int>(v.size()) != r) throw Error("element '" + elt + "' needs " + std::to_string(r) + " coordinates");
    S.push_back(v);
  }
  return cayley_abelian(p, r, S);
}

json invariants_json(const Graph& g) {
  json j;
  j["order"] = g.n();
  j["edges"] = g.m();
  auto k = g.valency();
  j["valency"] = k ? json(*k) : json(nullptr);
  bool conn = is_connected(g);
  j["connected"] = conn;
  j["diameter"] = conn ? json(diameter(g)) : json(nullptr);
  auto gi = girth(g);
  j["girth"] = gi ? json(*gi) : json("inf");
  j["bipartite"] = is_bipartite(g).bipartite;
  if (!conn) {
    j["distance_regular"] = false;
    j["reason"] = "disconnected";
    return j;
  }
  auto r = intersection_array(g);
  j["distance_regular"] = r.ok();
  if (r.ok()) {
    j["array"] = r.array->str();
    j["spheres"] = sphere_sizes(*r.array);
    auto imp = classify_imprimitive(g, *r.array);
    j["antipodal"] = imp.antipodal;
    if (imp.antipodal) j["antipodal_class_size"] = imp.r;
    j["type"] = imp.kind();
    auto ga = girth_from_array(*r.array);
    j["girth_from_array"] = ga ? json(*ga) : json("inf");
  } else {
    j["reason"] = r.reason;
    if (r.violation) j["witness"] = r.violation->str();
  }
  return j;
}

std::string invariants_text(const json& j) {
  std::ostringstream o;
  for (auto it = j.begin(); it != j.end(); ++it) {
    o << it.key() << ": ";
    if (it.value().is_string())
      o << it.value().get<std::string>();
    else
      o << it.value().dump();
    o << "\n";
  }
  return o.str();
}

std::vector<Params> parse_range_params(const std::string& key, const std::string& text) {
  std::vector<Params> out;
  if (text.empty()) return out;
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    out.push_back({{key, std::stoll(text)}});
    return out;
  }
  int64_t lo = std::stoll(text.substr(0, dots)), hi = std::stoll(text.substr(dots + 2));
  if (hi < lo) throw Error("empty range " + text);
  for (int64_t v = lo; v <= hi; ++v) out.push_back({{key, v}});
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dtg: distance-transitive graph toolkit"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "construct a graph from a family or a Cayley spec");
  std::string family, params, cayley, out;
  build->add_option("--family", family, "family name (see --list)");
  build->add_option("--params", params, "key=value list, e.g. d=3,n=4");
  build->add_option("--cayley", cayley, "golay-c12 | golay-c22 | golay-c23 | Zp^r:s1;s2;...");
  build->add_option("-o,--output", out, "output graph file (stdout when omitted)");
  bool list = false;
  build->add_flag("--list", list, "list families and their parameters");

  // invariants
  auto* inv = app.add_subcommand("invariants", "order, valency, diameter, girth, array");
  std::string graph_file;
  bool as_json = false;
  inv->add_option("graph", graph_file, "graph file")->required();
  inv->add_flag("--json", as_json, "JSON output");

  // aut
  auto* aut = app.add_subcommand("aut", "automorphism group");
  std::string aut_file, aut_out;
  uint64_t budget = kDefaultAutBudget;
  bool aut_json = false;
  aut->add_option("graph", aut_file, "graph file")->required();
  aut->add_option("-o,--output", aut_out, "write generators to this file");
  aut->add_option("--budget", budget, "search node budget");
  aut->add_flag("--json", aut_json, "JSON output");

  // check-dt
  auto* cdt = app.add_subcommand("check-dt", "is the graph distance transitive under the given group");
  std::string cdt_graph, cdt_group;
  cdt->add_option("graph", cdt_graph, "graph file")->required();
  cdt->add_option("--group", cdt_group, "generator file (default: full Aut)");

  // check-geodesic
  auto* cgeo = app.add_subcommand("check-geodesic", "s-geodesic and s-arc transitivity");
  std::string cg_graph, cg_group;
  int s_len = 2;
  cgeo->add_option("graph", cg_graph, "graph file")->required();
  cgeo->add_option("--s", s_len, "path length")->required();
  cgeo->add_option("--group", cg_group, "generator file (default: full Aut)");

  // quotient
  auto* quo = app.add_subcommand("quotient", "quotient by a vertex partition, with the cover check");
  std::string q_graph, q_part, q_out;
  quo->add_option("graph", q_graph, "graph file")->required();
  quo->add_option("--partition", q_part, "partition file: one block per line")->required();
  quo->add_option("-o,--output", q_out, "write the quotient graph here");

  // verify
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  bool deep = false, ver_json = false, verbose = false;
  std::string pack_dir, n_range, q_range;
  int row = 0;
  ver->add_option("suite", suite, "tables | rank4 | lemmas | golay | covers | properties | all")->required();
  ver->add_flag("--deep", deep, "include long automorphism computations");
  ver->add_flag("--json", ver_json, "JSON report");
  ver->add_flag("-v,--verbose", verbose, "print computed and expected values for passing cases");
  ver->add_option("--data-pack", pack_dir, "data pack directory");
  ver->add_option("--row", row, "rank4: a single row");
  ver->add_option("--n", n_range, "rank4: n or a range lo..hi");
  ver->add_option("--q", q_range, "rank4: q or a range lo..hi");
  std::string row_extra;
  ver->add_option("--params", row_extra, "rank4: further parameters, e.g. m=3,sign=+");
  bool no_timing = false;
  ver->add_flag("--no-timing", no_timing, "omit timing fields from JSON");

  // pack
  auto* pack = app.add_subcommand("pack", "write the Golay data pack");
  std::string pack_out = "data/golay-pack";
  pack->add_option("--out", pack_out, "target directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitEnv;
  }

  try {
    if (*build) {
      if (list) {
        for (const auto& f : family_names()) std::cout << f << "  " << family_usage(f) << "\n";
        return 0;
      }
      if (family.empty() == cayley.empty()) throw Error("give exactly one of --family or --cayley");
      Graph g = cayley.empty() ? build_family(parse_family(family, params)).graph : cayley_from_spec(cayley);
      emit_graph(g, out);
      if (!out.empty() && out != "-")
        std::cerr << "wrote " << out << ": " << g.n() << " vertices, " << g.m() << " edges\n";
      return 0;
    }
    if (*inv) {
      json j = invariants_json(read_graph_file(graph_file));
      std::cout << (as_json ? j.dump(2) + "\n" : invariants_text(j));
      return 0;
    }
    if (*aut) {
      Graph g = read_graph_file(aut_file);
      auto a = automorphism_group(g, budget);
      if (!aut_out.empty()) write_generator_file(aut_out, g.n(), a.generators);
      if (aut_json) {
        json j;
        j["order"] = a.order;
        j["factored"] = factor_string(a.order);
        j["generators"] = a.generators.size();
        j["vertex_transitive"] = a.group().is_transitive();
        j["nodes"] = a.nodes;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "order: " << a.order << " = " << factor_string(a.order) << "\n"
                  << "generators: " << a.generators.size() << "\n"
                  << "vertex-transitive: " << (a.group().is_transitive() ? "yes" : "no") << "\n";
      }
      return 0;
    }
    auto group_for = [&](const Graph& g, const std::string& file) {
      if (file.empty()) return automorphism_group(g).group();
      auto gf = read_generator_file(file);
      if (gf.degree != g.n()) throw Error("generator degree does not match the graph");
      return PermGroup(gf.degree, gf.gens);
    };
    if (*cdt) {
      Graph g = read_graph_file(cdt_graph);
      auto G = group_for(g, cdt_group);
      auto r = is_distance_transitive(g, G);
      std::cout << (r.ok ? "distance transitive" : "not distance transitive");
      if (!r.ok) {
        std::cout << ": " << r.reason;
        if (r.witness) {
          const auto& w = *r.witness;
          std::cout << " (pairs (" << w[0] << "," << w[1] << ") and (" << w[2] << "," << w[3] << "))";
        }
      }
      std::cout << "\n";
      return r.ok ? 0 : kExitFail;
    }
    if (*cgeo) {
      Graph g = read_graph_file(cg_graph);
      auto G = group_for(g, cg_group);
      validate_automorphisms(g, G);
      bool geo = is_s_geodesic_transitive(g, G, s_len);
      bool arc = is_s_arc_transitive(g, G, s_len);
      std::cout << s_len << "-geodesic transitive: " << (geo ? "yes" : "no") << "\n"
                << s_len << "-arc transitive: " << (arc ? "yes" : "no") << "\n";
      return geo ? 0 : kExitFail;
    }
    if (*quo) {
      Graph g = read_graph_file(q_graph);
      auto p = parse_partition(read_text_file(q_part), g.n());
      Graph q = quotient(g, p);
      auto c = is_cover(g, p);
      std::cout << "blocks: " << p.size() << "\n" << "cover: " << (c.ok ? "yes" : "no (" + c.str() + ")") << "\n";
      if (!q_out.empty()) write_graph_file(q_out, q);
      json j = invariants_json(q);
      std::cout << "quotient " << invariants_text(j);
      return 0;
    }
    if (*ver) {
      SuiteOptions opt;
      opt.deep = deep;
      if (!pack_dir.empty()) {
        if (!locate_data_pack(pack_dir)) throw Error("data pack missing: no manifest.json in " + pack_dir);
        opt.data_pack = pack_dir;
      }
      if (row) {
        if (suite != "rank4") throw Error("--row only applies to the rank4 suite");
        opt.row = row;
        auto ns = parse_range_params("n", n_range), qs = parse_range_params("q", q_range);
        if (!ns.empty() && !qs.empty()) {
          for (const auto& a : ns)
            for (const auto& b : qs) opt.row_params.push_back({{"n", a.at("n")}, {"q", b.at("q")}});
        } else {
          opt.row_params = ns.empty() ? qs : ns;
        }
        if (!row_extra.empty()) {
          if (opt.row_params.empty()) opt.row_params.push_back({});
          for (auto& ps : opt.row_params)
            for (const auto& [k, v] : parse_params(row_extra)) ps[k] = v;
        }
      }
      Report r = run_suite(suite, opt);
      if (ver_json)
        std::cout << r.to_json(!no_timing).dump(2) << "\n";
      else
        std::cout << r.to_text(verbose);
      return r.has_fail() ? kExitFail : 0;
    }
    if (*pack) {
      auto entries = write_golay_pack(pack_out);
      for (const auto& e : entries)
        std::cout << e.name << ": " << e.n << " vertices, " << e.m << " edges, sha256 " << e.sha256 << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "dtg: " << e.what() << "\n";
    return kExitEnv;
  }
  return 0;
}
