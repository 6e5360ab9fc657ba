#include "dtg/datapack.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "dtg/drg.hpp"
#include "dtg/error.hpp"
#include "dtg/genfile.hpp"
#include "dtg/golay.hpp"

namespace dtg {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr)) throw Error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

namespace {

PackEntry describe(const std::string& name, const Graph& g, const std::string& text, std::optional<uint64_t> aut,
                   const std::string& prov) {
  PackEntry e;
  e.name = name;
  e.file = name + ".g";
  e.sha256 = sha256_hex(text);
  e.n = g.n();
  e.m = g.m();
  e.valency = g.valency();
  auto r = intersection_array(g);
  if (r.ok()) e.array = r.array->str();
  e.aut_order = aut;
  e.provenance = prov;
  return e;
}

ojson to_json(const PackEntry& e) {
  ojson j;
  j["name"] = e.name;
  j["file"] = e.file;
  j["sha256"] = e.sha256;
  j["n"] = e.n;
  j["m"] = e.m;
  if (e.valency) j["valency"] = *e.valency;
  if (!e.array.empty()) j["array"] = e.array;
  if (e.aut_order) j["aut_order"] = *e.aut_order;
  j["provenance"] = e.provenance;
  return j;
}

}  // namespace

std::vector<PackEntry> write_golay_pack(const std::string& dir) {
  fs::create_directories(dir);
  std::vector<PackEntry> out;
  Graph c23 = golay_c23_coset_graph();
  Graph m23 = m23_octad_graph();
  // |Aut| = 2^11 |M23| and |M23|; recorded for reference
  struct Item {
    std::string name;
    const Graph* g;
    uint64_t aut;
    std::string prov;
  } items[] = {
      {"golay-c23", &c23, 2048ULL * 10200960ULL,
       "coset graph of the cyclic [23,12,7] binary Golay code, generator 1+x^2+x^4+x^5+x^6+x^10+x^11"},
      {"m23", &m23, 10200960ULL, "weight-8 words of the same code (octads avoiding the parity coordinate), adjacent when disjoint"},
  };
  ojson man;
  man["pack"] = "golay";
  man["graphs"] = ojson::array();
  for (const auto& it : items) {
    std::string text = write_graph(*it.g);
    write_text_file((fs::path(dir) / (it.name + ".g")).string(), text);
    out.push_back(describe(it.name, *it.g, text, it.aut, it.prov));
    man["graphs"].push_back(to_json(out.back()));
  }
  write_text_file((fs::path(dir) / "manifest.json").string(), man.dump(2) + "\n");
  return out;
}

std::vector<PackEntry> read_manifest(const std::string& dir) {
  fs::path p = fs::path(dir) / "manifest.json";
  if (!fs::exists(p)) throw Error("data pack missing: no manifest.json in " + dir);
  ojson man;
  try {
    man = ojson::parse(read_text_file(p.string()));
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed manifest.json: " + std::string(e.what()));
  }
  std::vector<PackEntry> out;
  for (const auto& j : man.at("graphs")) {
    PackEntry e;
    e.name = j.at("name").get<std::string>();
    e.file = j.at("file").get<std::string>();
    e.sha256 = j.at("sha256").get<std::string>();
    e.n = j.at("n").get<int>();
    e.m = j.at("m").get<uint64_t>();
    if (j.contains("valency")) e.valency = j["valency"].get<int>();
    if (j.contains("array")) e.array = j["array"].get<std::string>();
    if (j.contains("aut_order")) e.aut_order = j["aut_order"].get<uint64_t>();
    if (j.contains("provenance")) e.provenance = j["provenance"].get<std::string>();
    out.push_back(e);
  }
  return out;
}

LoadedGraph load_data_pack(const std::string& dir, const std::string& name) {
  for (const auto& e : read_manifest(dir)) {
    if (e.name != name) continue;
    fs::path p = fs::path(dir) / e.file;
    if (!fs::exists(p)) throw Error("data pack missing: " + p.string());
    std::string text = read_text_file(p.string());
    if (sha256_hex(text) != e.sha256) throw Error("checksum mismatch for " + e.file);
    LoadedGraph lg{parse_graph(text), e};
    const Graph& g = lg.graph;
    auto bad = [&](const std::string& what) { throw Error("invariant mismatch for " + name + ": " + what); };
    if (g.n() != e.n) bad("vertex count " + std::to_string(g.n()));
    if (g.m() != e.m) bad("edge count " + std::to_string(g.m()));
    if (e.valency && g.valency() != e.valency) bad("valency");
    if (!e.array.empty()) {
      auto r = intersection_array(g);
      if (!r.ok() || r.array->str() != e.array) bad("intersection array " + (r.ok() ? r.array->str() : r.reason));
    }
    return lg;
  }
  throw Error("data pack missing: no graph named " + name + " in " + dir);
}

std::optional<std::string> locate_data_pack(const std::string& explicit_dir) {
  std::string dir = explicit_dir;
  if (dir.empty())
    if (const char* env = std::getenv("DTG_DATA_PACK")) dir = env;
  if (dir.empty() || !fs::exists(fs::path(dir) / "manifest.json")) return std::nullopt;
  return dir;
}

Graph golay_distance2(GolayCode which, const std::optional<std::string>& pack_dir) {
  switch (which) {
    case GolayCode::C12:
      return distance_i_graph(golay_c12(), 2);
    case GolayCode::C22:
      return distance_i_graph(golay_c22(), 2);
    case GolayCode::C23:
      if (!pack_dir) throw Error("data pack missing: C23 needs --data-pack");
      return distance_i_graph(load_data_pack(*pack_dir, "golay-c23").graph, 2);
  }
  throw Error("unknown code");
}

}  // namespace dtg
