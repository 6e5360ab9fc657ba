#include "dtg/perm.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace dtg {

uint64_t default_seed() {
  if (const char* s = std::getenv("DTG_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && end != s) return v;
    throw Error(std::string("DTG_SEED is not an integer: ") + s);
  }
  return 1;
}

Perm::Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (Point p : img_) {
    if (p < 0 || p >= degree() || seen[p]) throw Error("image list is not a bijection");
    seen[p] = 1;
  }
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(n, 0);
  for (const auto& c : cycles) {
    for (size_t i = 0; i < c.size(); ++i) {
      Point a = c[i];
      if (a < 0 || a >= n) throw Error("cycle point " + std::to_string(a) + " out of range");
      if (used[a]) throw Error("point " + std::to_string(a) + " repeated in cycles");
      used[a] = 1;
      img[a] = c[(i + 1) % c.size()];
    }
  }
  return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& o) const {
  if (o.degree() != degree()) throw Error("degree mismatch in product");
  std::vector<Point> r(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) r[i] = o.img_[img_[i]];
  Perm p;
  p.img_ = std::move(r);
  return p;
}

void Perm::rmul(const Perm& o) {
  for (auto& x : img_) x = o.img_[x];
}

Perm Perm::inverse() const {
  std::vector<Point> r(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) r[img_[i]] = static_cast<Point>(i);
  Perm p;
  p.img_ = std::move(r);
  return p;
}

bool Perm::is_identity() const { return first_moved() < 0; }

Point Perm::first_moved() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<Point>(i)) return static_cast<Point>(i);
  return -1;
}

uint64_t Perm::order() const {
  uint64_t o = 1;
  for (const auto& c : cycles()) o = std::lcm(o, static_cast<uint64_t>(c.size()));
  return o;
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<char> seen(img_.size(), 0);
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == static_cast<Point>(i)) continue;
    std::vector<Point> c;
    for (Point j = static_cast<Point>(i); !seen[j]; j = img_[j]) {
      seen[j] = 1;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Perm::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

size_t PermHash::operator()(const std::vector<Point>& v) const {
  // FNV-1a over the image words
  uint64_t h = 1469598103934665603ULL;
  for (Point p : v) {
    h ^= static_cast<uint32_t>(p);
    h *= 1099511628211ULL;
  }
  return static_cast<size_t>(h);
}

size_t PermHash::operator()(const Perm& p) const { return (*this)(p.images()); }

}  // namespace dtg
