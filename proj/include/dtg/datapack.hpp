#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dtg/graph.hpp"

namespace dtg {

// one graph of a pack; expected invariants are re-checked on load, never trusted
struct PackEntry {
  std::string name;
  std::string file;
  std::string sha256;
  int n = 0;
  uint64_t m = 0;
  std::optional<int> valency;
  std::string array;                  // "{b;c}" or empty
  std::optional<uint64_t> aut_order;  // recorded, checked only on request
  std::string provenance;
};

struct LoadedGraph {
  Graph graph;
  PackEntry meta;
};

std::string sha256_hex(const std::string& data);

// writes golay-c23 and m23 (built from the cyclic Golay code) plus manifest.json into dir
std::vector<PackEntry> write_golay_pack(const std::string& dir);
std::vector<PackEntry> read_manifest(const std::string& dir);
// throws "data pack missing", "checksum mismatch for ...", "invariant mismatch for ..."
LoadedGraph load_data_pack(const std::string& dir, const std::string& name);
// explicit dir, else $DTG_DATA_PACK, else nullopt; only directories holding a manifest count
std::optional<std::string> locate_data_pack(const std::string& explicit_dir = "");

enum class GolayCode { C12, C22, C23 };
// distance-2 graph; C23 needs the pack
Graph golay_distance2(GolayCode which, const std::optional<std::string>& pack_dir);

}  // namespace dtg
