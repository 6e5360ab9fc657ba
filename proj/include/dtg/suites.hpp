#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dtg/formulas.hpp"
#include "dtg/report.hpp"

namespace dtg {

struct SuiteOptions {
  bool deep = false;                      // long Aut computations on the 1024/2048-vertex graphs
  std::optional<std::string> data_pack;   // directory with manifest.json
  std::optional<int> row;                 // rank4: a single row
  std::vector<Params> row_params;         // rank4: parameter sets for that row
};

// tables, rank4, lemmas, golay, covers, properties, all
std::vector<std::string> suite_names();
Report run_suite(const std::string& name, const SuiteOptions& opt);

Report suite_field_tables();
Report suite_lemmas();                     // field tables + form identities
Report suite_unitary63();                  // the 63-vertex graph from the GF(9) Hermitian space
Report suite_unitary208();                 // the 208-vertex graph from the GF(16) Hermitian space
Report suite_frames63();                   // second 63-vertex graph and non-isomorphism
Report suite_golay(const SuiteOptions& opt);
Report suite_rank4(const SuiteOptions& opt);
Report suite_gt3(const SuiteOptions& opt);
Report suite_covers(const SuiteOptions& opt);
Report suite_properties(const SuiteOptions& opt);

// brute-force subdegrees for a rank-4 row (nullopt: no oracle for this row)
struct RankFourOracle {
  uint64_t degree = 0;
  uint64_t group_order = 0;
  std::vector<uint64_t> subdegrees;  // including the trivial 1, sorted
};
std::optional<RankFourOracle> rank_four_oracle(int row, const Params& p);
// rank4 compare for one row/parameter set, added to r
void rank_four_case(Report& r, int row, const Params& p);

}  // namespace dtg
