#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace dtg {

// GF(p^f); element a encodes the polynomial sum c_i x^i with a = sum c_i p^i,
// so the prime field is 0..p-1. The modulus is the monic irreducible of degree f
// whose lower coefficients have the smallest such encoding (x^2+1 for 9, x^4+x+1 for 16).
class Field {
 public:
  static const Field& get(int q);  // cached; q a prime power <= 256

  int q() const { return q_; }
  int p() const { return p_; }
  int f() const { return f_; }
  const std::vector<int>& modulus() const { return mod_; }  // low..high, monic

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int inv(int a) const;
  int div(int a, int b) const { return mul(a, inv(b)); }
  int pow(int a, uint64_t e) const;
  int frob(int a, int times = 1) const;  // a -> a^(p^times)
  int from_int(int64_t v) const;         // image of an integer
  int primitive() const { return prim_; }
  int log(int a) const;                  // discrete log base primitive(); a != 0
  bool is_square(int a) const;

  std::string poly_str(int a, const std::string& var = "x") const;   // "1+2x"
  std::string power_str(int a, const std::string& var = "λ") const;  // "0", "1", "λ^7"
  // accepts "0", "3", "2x", "1+2x", "(1+2x)", "x^3+x+1", "λ", "λ^7", "L^7", "l^7"
  int parse(const std::string& s) const;

 private:
  Field(int p, int f);
  int q_, p_, f_, prim_ = 1;
  std::vector<int> mod_, add_, mul_, neg_, inv_, log_, exp_;
};

bool is_prime_power(int64_t q, int* p = nullptr, int* f = nullptr);

// dense matrices over a field; rows of element codes
using Vec = std::vector<int>;
using Mat = std::vector<Vec>;

// reduced row echelon form in place; returns rank (zero rows removed)
int rref(const Field& F, Mat& m);
Mat nullspace(const Field& F, const Mat& m);  // basis of {x : m x = 0}
int rank(const Field& F, Mat m);

}  // namespace dtg
