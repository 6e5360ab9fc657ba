#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dtg/drg.hpp"
#include "dtg/graph.hpp"
#include "dtg/permgroup.hpp"
#include "dtg/report.hpp"

namespace dtg {

struct VertexPartition {
  std::vector<std::vector<Vertex>> blocks;  // each sorted; blocks ordered by smallest vertex
  std::vector<int> block_of;

  // validates disjoint + covering of 0..n-1
  static VertexPartition from_blocks(int n, std::vector<std::vector<Vertex>> blocks);
  int n() const { return static_cast<int>(block_of.size()); }
  size_t size() const { return blocks.size(); }
  bool trivial() const;  // every block a singleton, or a single block
};

// blocks B ~ C iff some edge joins them; throws "partition must be nontrivial"
Graph quotient(const Graph& g, const VertexPartition& p);

struct CoverCheck {
  bool ok = false;
  // violating vertex u, the adjacent block and how many neighbours of u it holds
  std::optional<std::pair<Vertex, int>> witness;
  int count = 0;
  std::string str() const;
};
CoverCheck is_cover(const Graph& g, const VertexPartition& p);

VertexPartition orbit_partition(const PermGroup& group, int n);

// every generator of N conjugated by every generator of G lies in N
bool normalizes(const PermGroup& G, const PermGroup& N);

uint64_t stab_t(int64_t k, int64_t b3);  // k (k-1)^2 b3
bool stab_divisibility(int64_t k, int64_t b3, uint64_t aut_block_order);

// cover, girth pair in {(6,5),(7,6)}, quotient diameter >= 3, at least 3 blocks
Report check_hypothesis(const Graph& g, const Graph& sigma, const VertexPartition& p);

// the parameter chain for a valency-k, girth-7 cover of a girth-6 quotient sigma
struct ForcingStep {
  int i = 0;
  int64_t a = 0, b = 0, c = 0;
  std::string why;
};
struct ForcingChain {
  int k = 0;
  int girth_sigma = 0, girth_cover = 0;
  std::vector<ForcingStep> steps;  // i = 1, 2, 3
  int64_t c3_sigma_lower = 0;      // 1 + b3 of the cover
  int64_t c3_sigma = 0;            // from sigma's computed array
  bool contradiction() const { return c3_sigma_lower > c3_sigma; }
};
ForcingChain girth7_forcing_chain(const Graph& sigma);

// one block per line, space-separated vertex indices; '#' comments
VertexPartition parse_partition(const std::string& text, int n);
std::string write_partition(const VertexPartition& p);

}  // namespace dtg
