#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "dtg/error.hpp"

namespace dtg {

using Point = int32_t;

// permutations act on the right: i^(g*h) = (i^g)^h
class Perm {
 public:
  Perm() = default;
  explicit Perm(int n);
  explicit Perm(std::vector<Point> images);

  static Perm from_cycles(int n, const std::vector<std::vector<Point>>& cycles);

  int degree() const { return static_cast<int>(img_.size()); }
  Point operator[](Point i) const { return img_[i]; }
  const std::vector<Point>& images() const { return img_; }

  Perm operator*(const Perm& o) const;
  void rmul(const Perm& o);  // *this = *this * o without reallocating
  Perm inverse() const;
  bool is_identity() const;
  Point first_moved() const;  // -1 for identity
  uint64_t order() const;
  std::vector<std::vector<Point>> cycles() const;  // nontrivial cycles, each starting at its min
  std::string cycle_string() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

 private:
  std::vector<Point> img_;
};

struct PermHash {
  size_t operator()(const Perm& p) const;
  size_t operator()(const std::vector<Point>& v) const;
};

}  // namespace dtg
