#pragma once
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dtg/automorphism.hpp"
#include "dtg/graph.hpp"
#include "dtg/permgroup.hpp"

namespace dtg {

// undirected orbital graph of the suborbit containing rep (relative to base)
Graph orbital_graph(const PermGroup& action, Point rep, Point base = 0);

// throws "generator not an automorphism" when a generator does not preserve g
void validate_automorphisms(const Graph& g, const PermGroup& group);

struct DtResult {
  bool ok = false;
  std::string reason;
  // two pairs (u1,u2), (v1,v2) at equal distance that no group element maps onto each other
  std::optional<std::array<Vertex, 4>> witness;
};
DtResult is_distance_transitive(const Graph& g, const PermGroup& group);

struct GeodesicSet {
  int s = 0;
  std::vector<std::vector<Vertex>> tuples;
};
constexpr size_t kMaxTuples = 10'000'000;
GeodesicSet enumerate_geodesics(const Graph& g, int s);

// both decided through stabilizer chains along one representative tuple
bool is_s_geodesic_transitive(const Graph& g, const PermGroup& group, int s);
bool is_s_arc_transitive(const Graph& g, const PermGroup& group, int s);

}  // namespace dtg
