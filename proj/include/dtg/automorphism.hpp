#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "dtg/graph.hpp"
#include "dtg/permgroup.hpp"

namespace dtg {

struct AutGroup {
  int n = 0;
  std::vector<Perm> generators;
  uint64_t order = 1;
  std::vector<Point> base;         // first-path vertices
  std::vector<uint64_t> orbit_sizes;  // per base level; product = order
  uint64_t nodes = 0;              // search nodes expanded
  PermGroup group() const { return PermGroup(n, generators, order); }
};

constexpr uint64_t kDefaultAutBudget = 2'000'000;
constexpr int kMaxAutVertices = 5000;

// throws BudgetExceeded when more than budget nodes are expanded
AutGroup automorphism_group(const Graph& g, uint64_t budget = kDefaultAutBudget);
// an isomorphism a -> b (as a vertex map), or nullopt
std::optional<Perm> find_isomorphism(const Graph& a, const Graph& b, uint64_t budget = kDefaultAutBudget);

}  // namespace dtg
