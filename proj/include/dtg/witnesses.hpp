#pragma once
#include "dtg/report.hpp"

namespace dtg {

// GF(9) products and GF(16) sums against the printed tables (64 + 240 cells)
Report verify_field_tables();
// every printed form identity, 2-geodesic and span (non)degeneracy claim of the suborbit lemmas
Report verify_witnesses();

}  // namespace dtg
