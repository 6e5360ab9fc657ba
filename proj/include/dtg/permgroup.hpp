#pragma once
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dtg/perm.hpp"

namespace dtg {

// Stabilizer chain with Schreier trees. Level i fixes base[0..i-1].
class StabChain {
 public:
  struct Level {
    Point base;
    std::vector<int> gens;           // indices into strong()
    std::vector<int32_t> tree;       // -1 not in orbit, -2 root, else strong gen index
    std::vector<Point> orbit;
  };

  StabChain() = default;
  StabChain(int degree, const std::vector<Perm>& gens, const std::vector<Point>& base_prefix,
            std::optional<uint64_t> known_order, uint64_t seed);

  int degree() const { return n_; }
  uint64_t order() const;
  const std::vector<Level>& levels() const { return levels_; }
  std::vector<Point> base() const;
  const std::vector<Perm>& strong() const { return strong_; }

  // residue after sifting and the level where it stopped (levels().size() if it went through)
  std::pair<Perm, size_t> sift(Perm g) const;
  bool contains(const Perm& g) const;
  // u with base[level]^u = p
  Perm transversal(size_t level, Point p) const;
  bool in_orbit(size_t level, Point p) const { return levels_[level].tree[p] != -1; }
  // generators of the stabilizer of base[0..level-1]
  std::vector<Perm> level_generators(size_t level) const;

 private:
  int n_ = 0;
  std::vector<Perm> strong_, strong_inv_;
  std::vector<size_t> depth_;  // first base index moved by each strong gen
  std::vector<Level> levels_;

  void add_level(Point b);
  void add_strong(Perm g);
  void extend_orbit(size_t level, int gen);
  bool verify();  // deterministic Schreier check; false if it had to add generators
};

class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(int degree, std::vector<Perm> gens, std::optional<uint64_t> known_order = std::nullopt);

  static PermGroup symmetric(int n);
  static PermGroup alternating(int n);

  int degree() const { return n_; }
  const std::vector<Perm>& generators() const { return gens_; }
  std::optional<uint64_t> known_order() const { return known_; }

  const StabChain& chain() const;
  // fresh chain whose base begins with prefix (for point / tuple stabilizers)
  StabChain chain_with_base(const std::vector<Point>& prefix) const;
  // pointwise stabilizer of pts
  PermGroup stabilizer(const std::vector<Point>& pts) const;

  uint64_t order() const { return chain().order(); }
  bool contains(const Perm& g) const;
  std::vector<Point> orbit(Point p) const;  // sorted
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

 private:
  int n_ = 0;
  std::vector<Perm> gens_;
  std::optional<uint64_t> known_;
  struct Lazy {
    std::once_flag once;
    std::unique_ptr<StabChain> chain;
  };
  std::shared_ptr<Lazy> lazy_ = std::make_shared<Lazy>();
};

std::vector<Point> orbit_of(int degree, const std::vector<Perm>& gens, Point p);

// product replacement; deterministic for a given seed
class RandomElements {
 public:
  RandomElements(int degree, const std::vector<Perm>& gens, uint64_t seed);
  Perm next();

 private:
  std::vector<Perm> pool_;
  Perm acc_;
  std::mt19937_64 rng_;
};

struct ActionTable {
  int m = 0;
  std::vector<Perm> gens;  // images of the group generators, degree m
  std::vector<Perm> reps;  // coset representatives (labels), when built from cosets
  PermGroup group(std::optional<uint64_t> known = std::nullopt) const { return PermGroup(m, gens, known); }
};

// right-multiplication action on the right cosets of sub in g
ActionTable coset_action(const PermGroup& g, const PermGroup& sub, size_t max_index = 100000);

struct Suborbit {
  int index = -1;
  std::vector<Point> points;  // sorted
  int paired = -1;            // index of the paired suborbit (== index when self-paired)
  bool self_paired() const { return paired == index; }
};

// orbits of the stabilizer of base; suborbit 0 is {base}; remaining ordered by smallest point
std::vector<Suborbit> orbitals(const PermGroup& g, Point base = 0);
std::vector<uint64_t> subdegrees(const std::vector<Suborbit>& s);

// minimal nontrivial block systems, each a partition (blocks sorted, by smallest point)
std::vector<std::vector<std::vector<Point>>> block_systems(const PermGroup& g);

std::string factor_string(uint64_t n);  // 12096 -> "2^6·3^3·7"

}  // namespace dtg
