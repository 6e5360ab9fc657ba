#include "dtg/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "dtg/error.hpp"

namespace dtg {

bool is_prime_power(int64_t q, int* p, int* f) {
  if (q < 2) return false;
  int64_t r = q, pp = 0;
  for (int64_t d = 2; d * d <= r; ++d)
    if (r % d == 0) {
      pp = d;
      break;
    }
  if (!pp) pp = r;
  int e = 0;
  while (r % pp == 0) {
    r /= pp;
    ++e;
  }
  if (r != 1) return false;
  if (p) *p = static_cast<int>(pp);
  if (f) *f = e;
  return true;
}

const Field& Field::get(int q) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return *it->second;
  int p, f;
  if (q > 256 || !is_prime_power(q, &p, &f)) throw Error("unsupported field order " + std::to_string(q));
  auto* F = new Field(p, f);
  cache[q].reset(F);
  return *F;
}

namespace {

std::vector<int> digits(int a, int p, int f) {
  std::vector<int> c(f);
  for (int i = 0; i < f; ++i) {
    c[i] = a % p;
    a /= p;
  }
  return c;
}

int encode(const std::vector<int>& c, int p) {
  int a = 0;
  for (size_t i = c.size(); i-- > 0;) a = a * p + c[i];
  return a;
}

// product of polynomials (coefficient lists, low..high) reduced mod monic m of degree f
std::vector<int> polymulmod(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& m, int p) {
  int f = static_cast<int>(m.size()) - 1;
  std::vector<int> r(2 * f, 0);
  for (int i = 0; i < f; ++i)
    for (int j = 0; j < f; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  for (int k = 2 * f - 2; k >= f; --k) {
    int c = r[k];
    if (!c) continue;
    for (int i = 0; i <= f; ++i) r[k - f + i] = ((r[k - f + i] - c * m[i]) % p + p) % p;
  }
  r.resize(f);
  return r;
}

}  // namespace

Field::Field(int p, int f) : q_(1), p_(p), f_(f) {
  for (int i = 0; i < f; ++i) q_ *= p;
  // smallest monic irreducible, found by checking the quotient ring has no zero divisors
  mod_.assign(f + 1, 0);
  mod_[f] = 1;
  if (f == 1) {
    mod_[0] = 0;  // x (unused)
  } else {
    for (int low = 0; low < q_; ++low) {
      auto c = digits(low, p, f);
      std::vector<int> m(c);
      m.push_back(1);
      bool ok = true;
      for (int a = 1; a < q_ && ok; ++a)
        for (int b = a; b < q_; ++b) {
          auto r = polymulmod(digits(a, p, f), digits(b, p, f), m, p);
          if (encode(r, p) == 0) {
            ok = false;
            break;
          }
        }
      if (ok) {
        mod_ = m;
        break;
      }
    }
  }
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    auto da = digits(a, p, f);
    std::vector<int> n(f);
    for (int i = 0; i < f; ++i) n[i] = (p - da[i]) % p;
    neg_[a] = encode(n, p);
    for (int b = 0; b < q_; ++b) {
      auto db = digits(b, p, f);
      std::vector<int> s(f);
      for (int i = 0; i < f; ++i) s[i] = (da[i] + db[i]) % p;
      add_[a * q_ + b] = encode(s, p);
      if (f == 1)
        mul_[a * q_ + b] = a * b % p;
      else
        mul_[a * q_ + b] = encode(polymulmod(da, db, mod_, p), p);
    }
  }
  inv_.assign(q_, 0);
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul(a, b) == 1) inv_[a] = b;
  // primitive element: smallest code of multiplicative order q-1
  for (int g = 2 - (q_ == 2); g < q_; ++g) {
    int x = 1, ord = 0;
    do {
      x = mul(x, g);
      ++ord;
    } while (x != 1);
    if (ord == q_ - 1) {
      prim_ = g;
      break;
    }
  }
  exp_.resize(q_ - 1);
  log_.assign(q_, -1);
  int x = 1;
  for (int k = 0; k < q_ - 1; ++k) {
    exp_[k] = x;
    log_[x] = k;
    x = mul(x, prim_);
  }
}

int Field::inv(int a) const {
  if (a == 0) throw Error("division by zero in GF(" + std::to_string(q_) + ")");
  return inv_[a];
}

int Field::pow(int a, uint64_t e) const {
  int r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

int Field::frob(int a, int times) const {
  for (int t = 0; t < times; ++t) a = pow(a, p_);
  return a;
}

int Field::from_int(int64_t v) const { return static_cast<int>(((v % p_) + p_) % p_); }

int Field::log(int a) const {
  if (a == 0) throw Error("log of zero");
  return log_[a];
}

bool Field::is_square(int a) const { return a == 0 || p_ == 2 || log(a) % 2 == 0; }

std::string Field::poly_str(int a, const std::string& var) const {
  if (a == 0) return "0";
  auto c = digits(a, p_, f_);
  std::string out;
  for (int i = 0; i < f_; ++i) {
    if (!c[i]) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
    } else {
      if (c[i] != 1) out += std::to_string(c[i]);
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::string Field::power_str(int a, const std::string& var) const {
  if (a == 0) return "0";
  // powers of the root x of the modulus (for GF(16) this root is primitive)
  int root = f_ == 1 ? prim_ : p_;
  int x = 1;
  for (int k = 0; k < q_ - 1; ++k) {
    if (x == a) return k == 0 ? "1" : k == 1 ? var : var + "^" + std::to_string(k);
    x = mul(x, root);
  }
  throw Error("element is not a power of x (x is not primitive in GF(" + std::to_string(q_) + "))");
}

int Field::parse(const std::string& s0) const {
  std::string s;
  for (char ch : s0)
    if (!isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw Error("empty field element");
  // λ / L / l powers of the root x
  for (const std::string lam : {"λ", "L", "l"}) {
    if (s.rfind(lam, 0) == 0) {
      std::string rest = s.substr(lam.size());
      int e = 1;
      if (!rest.empty()) {
        if (rest[0] != '^') throw Error("bad element '" + s0 + "'");
        e = std::stoi(rest.substr(1));
      }
      int root = f_ == 1 ? prim_ : p_;
      return pow(root, static_cast<uint64_t>(e));
    }
  }
  int total = 0;
  size_t i = 0;
  while (i < s.size()) {
    size_t j = s.find('+', i);
    std::string term = s.substr(i, j == std::string::npos ? std::string::npos : j - i);
    i = j == std::string::npos ? s.size() : j + 1;
    if (term.empty()) throw Error("bad element '" + s0 + "'");
    size_t k = 0;
    int coef = 1;
    bool has_num = false;
    while (k < term.size() && isdigit(static_cast<unsigned char>(term[k]))) ++k;
    if (k > 0) {
      coef = from_int(std::stoll(term.substr(0, k)));
      has_num = true;
    }
    std::string rest = term.substr(k);
    int val;
    if (rest.empty()) {
      if (!has_num) throw Error("bad element '" + s0 + "'");
      val = coef;
    } else if (rest[0] == 'x') {
      int e = 1;
      if (rest.size() > 1) {
        if (rest[1] != '^') throw Error("bad element '" + s0 + "'");
        e = std::stoi(rest.substr(2));
      }
      if (f_ == 1) throw Error("GF(" + std::to_string(q_) + ") has no x");
      val = mul(coef, pow(p_, static_cast<uint64_t>(e)));
    } else {
      throw Error("bad element '" + s0 + "'");
    }
    total = add(total, val);
  }
  return total;
}

int rref(const Field& F, Mat& m) {
  if (m.empty()) return 0;
  size_t cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < m.size(); ++c) {
    size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    int iv = F.inv(m[r][c]);
    for (auto& x : m[r]) x = F.mul(x, iv);
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      int fct = m[i][c];
      for (size_t j = 0; j < cols; ++j) m[i][j] = F.sub(m[i][j], F.mul(fct, m[r][j]));
    }
    ++r;
  }
  m.resize(r);
  return static_cast<int>(r);
}

int rank(const Field& F, Mat m) { return rref(F, m); }

Mat nullspace(const Field& F, const Mat& m0) {
  Mat m = m0;
  size_t cols = m.empty() ? 0 : m[0].size();
  rref(F, m);
  std::vector<int> pivcol;
  for (auto& row : m) {
    size_t c = 0;
    while (row[c] == 0) ++c;
    pivcol.push_back(static_cast<int>(c));
  }
  Mat out;
  for (size_t free = 0; free < cols; ++free) {
    if (std::find(pivcol.begin(), pivcol.end(), static_cast<int>(free)) != pivcol.end()) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (size_t i = 0; i < m.size(); ++i) v[pivcol[i]] = F.neg(m[i][free]);
    out.push_back(v);
  }
  return out;
}

}  // namespace dtg
