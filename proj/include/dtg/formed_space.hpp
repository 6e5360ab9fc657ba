#pragma once
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dtg/field.hpp"
#include "dtg/graph.hpp"
#include "dtg/permgroup.hpp"

namespace dtg {

enum class FormKind { Hermitian, Orthogonal, Symplectic };

// GF(field)^n with a form given by its Gram matrix on the standard basis
// (e1..em, f1..fm, d for odd n; the minus type uses e1..e(m-1), d, t, f1..f(m-1))
class FormedSpace {
 public:
  static FormedSpace unitary(int n, int q);  // field GF(q^2)
  static FormedSpace orthogonal(int n, int q, const std::string& type);  // plus / minus / circle
  static FormedSpace symplectic(int n, int q);
  // "unitary:n=3,q=3", "orthogonal:n=6,q=4,type=minus", "symplectic:n=6,q=2"
  static FormedSpace parse(const std::string& spec);

  FormKind kind() const { return kind_; }
  int n() const { return n_; }
  int q() const { return q_; }  // the q of the spec (field is GF(q^2) for unitary)
  const Field& field() const { return *F_; }
  const std::string& type() const { return type_; }
  std::string spec() const;
  const std::vector<std::string>& basis_names() const { return names_; }
  const Mat& gram() const { return gram_; }

  int beta(const Vec& v, const Vec& w) const;
  int Q(const Vec& v) const;  // orthogonal only
  bool nonsingular(const Vec& v) const;

  Vec parse_vector(const std::string& text) const;  // "4e1+3e2+(1+2x)f1+λ^7d"
  std::string vector_str(const Vec& v) const;
  std::string elem_str(int a) const;  // power notation in GF(16)/GF(4), polynomial otherwise

  uint64_t key(const Vec& v) const;  // base-|F| encoding
  Vec scale(int k, const Vec& v) const;
  Vec add(const Vec& a, const Vec& b) const;
  // canonical representative of <v> in P (beta(v,v)=1 resp. Q(v)=1), lexicographically smallest;
  // nullopt when <v> is not in P
  std::optional<Vec> normalize(const Vec& v) const;

 private:
  FormKind kind_ = FormKind::Hermitian;
  int n_ = 0, q_ = 0;
  const Field* F_ = nullptr;
  std::string type_;
  Mat gram_;
  Vec qdiag_;  // Q on basis vectors (orthogonal)
  std::vector<std::string> names_;
  std::vector<int> unit_scalars_;  // scalars k with k^(q+1)=1 (unitary) or k^2=1 (orthogonal)
};

struct PointSet {
  std::vector<Vec> points;  // normalized representatives, enumeration order
  std::unordered_map<uint64_t, int> index;  // key of any normalized rep -> point index
  int find(const FormedSpace& s, const Vec& v) const;  // -1 when not in P
};

constexpr uint64_t kMaxRawVectors = 100'000'000;
PointSet enumerate_points(const FormedSpace& s);

// 1, 2 or 3 for the four classified cases (unitary q=3,4; orthogonal q=5,4); throws otherwise
int suborbit_of(const FormedSpace& s, const Vec& u, const Vec& w);
// <u,w> ∩ <u,w>^⊥ = 0,, checked by enumerating the span
bool span_radical_trivial(const FormedSpace& s, const Vec& u, const Vec& w);
// V = W + W^⊥ with W = <u,w>, by linear algebra
bool span_complemented(const FormedSpace& s, const Vec& u, const Vec& w);
// vectors of <u,w> orthogonal to both u and w (including 0)
std::vector<Vec> span_radical(const FormedSpace& s, const Vec& u, const Vec& w);

Graph geometric_orbital_graph(const FormedSpace& s, const PointSet& p, int delta_index);

// x -> (x^sigma) M with sigma = frob-th power of the Frobenius
struct SemiLinear {
  Mat m;
  int frob = 0;
  Vec apply(const Field& F, const Vec& x) const;
};

// form-preserving rank-1 maps x -> x + a b(x,v) v from seeded random v, plus the Frobenius
// when it preserves the Gram data; every returned map is checked against the form
std::vector<SemiLinear> isometry_generators(const FormedSpace& s, uint64_t seed, int count = 0);
bool preserves_form(const FormedSpace& s, const SemiLinear& g);

// permutation action on P of the given semilinear maps
ActionTable point_action(const FormedSpace& s, const PointSet& p, const std::vector<SemiLinear>& gens);
// the isometry-plus-Frobenius group of a unitary space on its non-singular points (|P| <= 1000 for the full
// group order; larger P still gets generators)
ActionTable unitary_group_action(int n, int q, uint64_t seed);

// k-subspaces as RREF bases
struct SubspaceSet {
  int n = 0, k = 0;
  std::vector<Mat> spaces;
  std::unordered_map<std::string, int> index;
  int find(const Field& F, Mat basis) const;
};
SubspaceSet enumerate_subspaces(const Field& F, int n, int k, const std::function<bool(const Mat&)>& keep = {});
SubspaceSet totally_isotropic_subspaces(const FormedSpace& s, int k);  // totally singular for orthogonal
ActionTable subspace_action(const FormedSpace& s, const SubspaceSet& set, const std::vector<SemiLinear>& gens);
ActionTable subspace_action(const Field& F, const SubspaceSet& set, const std::vector<SemiLinear>& gens);

}  // namespace dtg
