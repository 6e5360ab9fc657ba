#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dtg/graph.hpp"

namespace dtg {

class IntersectionArray {
 public:
  IntersectionArray() = default;
  // b = b0..b_{d-1}, c = c1..c_d; validated
  IntersectionArray(std::vector<int64_t> b, std::vector<int64_t> c);
  static IntersectionArray parse(const std::string& text);  // "{b0,...;c1,...}"

  int d() const { return static_cast<int>(b_.size()); }
  int64_t valency() const { return b_.empty() ? 0 : b_[0]; }
  int64_t b(int i) const { return i < d() ? b_[i] : 0; }         // b_d = 0
  int64_t c(int i) const { return i == 0 ? 0 : c_[i - 1]; }      // c_0 = 0
  int64_t a(int i) const { return valency() - b(i) - c(i); }     // a_0 = 0
  const std::vector<int64_t>& bs() const { return b_; }
  const std::vector<int64_t>& cs() const { return c_; }

  std::string str() const;
  bool operator==(const IntersectionArray& o) const { return b_ == o.b_ && c_ == o.c_; }
  bool operator!=(const IntersectionArray& o) const { return !(*this == o); }

 private:
  std::vector<int64_t> b_, c_;
};

// k_0..k_d; throws "inconsistent array" when k_i b_i / c_{i+1} is not an integer
std::vector<uint64_t> sphere_sizes(const IntersectionArray& a);
// the |Γ2| >= max(|Γ1|,|Γ3|) inequality for diameter 3 (true for other d)
bool middle_sphere_inequality(const IntersectionArray& a);
// nullopt means no cycle is forced (a tree, e.g. K2)
std::optional<int> girth_from_array(const IntersectionArray& a);

struct DrgViolation {
  Vertex u = -1, v = -1;
  int i = 0;
  char param = 'b';   // which of a/b/c disagreed ('k' for degree)
  int64_t expected = 0, got = 0;
  std::string str() const;
};

struct DrgResult {
  std::optional<IntersectionArray> array;
  std::optional<DrgViolation> violation;  // set when not distance-regular
  std::string reason;                     // "not regular" / "not distance-regular"
  bool ok() const { return array.has_value(); }
};

// checks every vertex; throws on disconnected input
DrgResult intersection_array(const Graph& g);
IntersectionArray require_intersection_array(const Graph& g);

struct Imprimitivity {
  bool bipartite = false;
  bool antipodal = false;
  int r = 0;                                 // antipodal class size
  std::vector<std::vector<Vertex>> classes;  // antipodal classes when antipodal
  std::string kind() const;                  // primitive / bipartite / antipodal(r) / bipartite+antipodal(r)
};
Imprimitivity classify_imprimitive(const Graph& g, const IntersectionArray& a);

IntersectionArray antipodal_quotient_array(int64_t n, int64_t r, int64_t c2);

// b_0 b_1 ... b_{s-1} divides stabilizer_order
bool geodesic_divisibility(const IntersectionArray& a, int s, uint64_t stabilizer_order);

}  // namespace dtg
