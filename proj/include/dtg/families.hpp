#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dtg/graph.hpp"
#include "dtg/perm.hpp"
#include "dtg/permgroup.hpp"

namespace dtg {

constexpr int kMaxFamilyVertices = 5000;

struct FamilySpec {
  std::string family;
  std::map<std::string, int64_t> params;
  int64_t get(const std::string& key) const;                   // throws when missing
  int64_t get(const std::string& key, int64_t fallback) const;
};

// "hamming" + "d=3,n=4"
FamilySpec parse_family(const std::string& family, const std::string& params);
std::vector<std::string> family_names();
// one-line parameter help per family
std::string family_usage(const std::string& family);

// the graph and, when the construction has one, a vertex-transitive group acting on it
struct Built {
  Graph graph;
  std::optional<PermGroup> group;
  std::string note;  // search details (seed, attempts) for randomized constructions
};

Built build_family(const FamilySpec& spec);
inline Graph build(const FamilySpec& spec) { return build_family(spec).graph; }

// Cay(G, S) for G = <gens> <= Sym(degree): u ~ s*u; S must be inverse-closed, avoid 1 and generate G
Graph cayley_perm(int degree, const std::vector<Perm>& gens, const std::vector<Perm>& S);

// individual constructors
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph complete_multipartite(int m, int b);
Graph hamming_graph(int d, int n);
Graph johnson_graph(int n, int k);
Graph odd_graph(int k);
Graph pg_incidence(int dim, int q);   // points vs hyperplanes of PG(dim,q)
Graph hoffman_singleton();
Graph g42_graph();                    // Hoffman-Singleton minus a closed neighbourhood
Graph sylvester_graph();              // Hoffman-Singleton minus the closed neighbourhoods of an edge's ends

struct PerkelBuild {
  Built built;
  int attempts = 0;
  uint64_t seed = 0;
};
// PSL(2,19) on cosets of an A5 found by random (2,3,5)-search; 57 vertices
PerkelBuild perkel_graph(uint64_t seed, int budget = 20000);

// orthonormal frames of the unitary 3-space over GF(9) under PGammaU(3,3); orbital with suborbit 6
Built frames63_graph(uint64_t seed);

}  // namespace dtg
