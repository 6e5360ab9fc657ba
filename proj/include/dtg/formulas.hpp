#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dtg {

using Params = std::map<std::string, int64_t>;

// "n=3,q=4" -> {n:3, q:4}; "sign=-" accepted as -1
Params parse_params(const std::string& s);

int64_t gaussian_binomial(int m, int k, int q);

// named closed-form counts; throws NonIntegerResult when a division is not exact
//   gaussian(m,k,q), m-subspace(q,k), unitary-points(n,q) for q in {3,4},
//   unitary-singular(n), rowN.dI / rowN.total for the parametric rank-4 rows
int64_t count_formula(const std::string& name, const Params& params);

// one row of the rank-4 subdegree table, evaluated at params
struct RankFourRow {
  int row = 0;
  std::string group;
  std::string stabilizer;
  bool parametric = false;
  bool leading_one = true;     // printed as "1+..."; the five geometric rows list only the three classes
  std::vector<int64_t> terms;  // the nontrivial subdegrees, in printed order
  int64_t degree() const;      // 1 + sum(terms)
};

constexpr int kRankFourRows = 74;
// throws Error for a bad row or missing/invalid parameters
RankFourRow rank_four_row(int row, const Params& params = {});
// parameter names a parametric row needs (empty for constant rows)
std::vector<std::string> rank_four_params(int row);

}  // namespace dtg
