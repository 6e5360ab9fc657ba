#include "dtg/formulas.hpp"

#include <sstream>

#include "dtg/error.hpp"

namespace dtg {

namespace {

using I = __int128;

I ipow(I b, int64_t e) {
  if (e < 0) throw Error("negative exponent");
  I r = 1;
  for (int64_t i = 0; i < e; ++i) {
    r *= b;
    if (r > (I(1) << 100) || r < -(I(1) << 100)) throw Error("formula value out of range");
  }
  return r;
}

I sgn(int64_t e) { return e % 2 == 0 ? 1 : -1; }  // (-1)^e

I exact(I num, I den, const std::string& what) {
  if (den == 0) throw Error("division by zero in " + what);
  if (num % den != 0) {
    auto str = [](I v) {
      bool neg = v < 0;
      if (neg) v = -v;
      std::string s;
      do {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
      } while (v);
      return neg ? "-" + s : s;
    };
    throw NonIntegerResult("non-integer result in " + what + ": " + str(num) + "/" + str(den));
  }
  return num / den;
}

int64_t narrow(I v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error("formula value out of range");
  return static_cast<int64_t>(v);
}

int64_t need(const Params& p, const std::string& key, int64_t lo, const std::string& what) {
  auto it = p.find(key);
  if (it == p.end()) throw Error(what + " needs parameter " + key);
  if (it->second < lo) throw Error(what + ": " + key + " must be >= " + std::to_string(lo));
  return it->second;
}

bool prime_power(int64_t q) {
  if (q < 2) return false;
  int64_t p = 2;
  while (q % p) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

int64_t need_q(const Params& p, const std::string& what) {
  int64_t q = need(p, "q", 2, what);
  if (!prime_power(q)) throw Error(what + ": q must be a prime power");
  return q;
}

I gauss(int64_t m, int64_t k, I q) {
  if (k < 0 || k > m) return 0;
  I num = 1, den = 1;
  for (int64_t i = 0; i < k; ++i) {
    num *= ipow(q, m - i) - 1;
    den *= ipow(q, i + 1) - 1;
  }
  return exact(num, den, "gaussian binomial");
}

struct ConstRow {
  int row;
  const char* group;
  const char* stab;
  std::vector<int64_t> terms;
};

const std::vector<ConstRow>& const_rows() {
  static const std::vector<ConstRow> rows = {
      {3, "M10", "5:4", {5, 10, 20}},
      {4, "S6.2", "10:4", {5, 10, 20}},
      {5, "A12", "M12", {440, 495, 1584}},
      {6, "A12", "A6^2.2^2", {36, 200, 225}},
      {7, "A14", "A7^2.4", {49, 441, 1225}},
      {8, "S12", "S6 wr S2", {36, 200, 225}},
      {9, "S14", "S7 wr S2", {49, 441, 1225}},
      {10, "M11", "S5", {15, 20, 30}},
      {11, "M12.2", "PSL(2,11).2", {22, 55, 66}},
      {12, "M22.o", "2^4:S5.o", {30, 40, 160}},
      {13, "M23", "A8", {15, 210, 253}},
      {14, "M23", "M11", {165, 330, 792}},
      {15, "M24", "2^4:A8", {30, 280, 448}},
      {16, "M24", "2^6:3.S6", {90, 240, 1440}},
      {17, "J2.o", "3.PGL(2,9).o", {36, 108, 135}},
      {18, "McL", "M22", {330, 462, 1232}},
      {19, "He.2", "Sp(4,4).4", {272, 425, 1360}},
      {20, "Fi22.o", "O8+(2).S3 x o", {1575, 22400, 37800}},
      {21, "Co1", "Co2", {4600, 46575, 47104}},
      {25, "PGL(2,7)", "D16", {4, 8, 8}},
      {26, "PSL(2,8)", "D18", {9, 9, 9}},
      {27, "PSL(2,16).4", "17:8", {17, 34, 68}},
      {28, "PSL(2,16).4", "(A5 x 2).2", {12, 15, 40}},
      {29, "PSL(2,19)", "A5", {6, 20, 30}},
      {30, "PSL(2,25).o", "S5 x o", {20, 24, 30}},
      {31, "PSL(2,32).5", "33 x 10", {165, 165, 165}},
      {32, "PSL(3,4).o", "PSL(2,7).o", {21, 42, 56}},
      {33, "PSL(3,4).2", "PSL(2,7) x 2", {21, 42, 56}},
      {34, "PSL(3,4).2^2", "PGL(2,7) x 2", {21, 42, 56}},
      {35, "PSL(4,4).2", "PSp(4,4).2", {255, 272, 480}},
      {36, "PSL(4,4).2^2", "(2 x PSp(4,4)).2", {255, 272, 480}},
      {37, "PSL(4,5).o", "PSp(4,5).o", {325, 600, 624}},
      {38, "PSL(4,5).2", "PSp(4,5) x 2", {325, 600, 624}},
      {39, "PSL(4,5).2^2", "(PSp(4,5) x 2).2", {325, 600, 624}},
      {41, "PSp(4,5).o", "2.A5^2.2 x o", {60, 120, 144}},
      {42, "PSp(4,5).o", "(o x PSL(2,25)).2", {65, 104, 130}},
      {43, "PSp(6,4).2", "G2(4).2", {4095, 4160, 8064}},
      {48, "PSU(3,3)", "PSL(2,7)", {7, 7, 21}},
      {49, "PSU(3,3)", "4.S4", {6, 24, 32}},
      {50, "PSU(3,3).2", "Q8.A4:2", {6, 24, 32}},
      {51, "PSU(3,3).2", "4^2:3:2^2", {6, 24, 32}},
      {52, "PSU(3,5).o", "A6.2 x o", {12, 72, 90}},
      {53, "PSU(4,4).4", "2.PSp(4,4).2", {240, 255, 544}},
      {54, "PSU(4,5).o", "o.PSp(4,5).2", {300, 624, 650}},
      {55, "PSU(6,2).o", "PSp(6,2) x o", {315, 2240, 3780}},
      {62, "O7(3)", "PSp(6,2)", {288, 630, 2240}},
      {63, "O7(5).o", "G2(5).o", {7875, 15500, 15624}},
      {64, "O8+(2).o", "A9.o", {84, 315, 560}},
      {65, "O8+(3).S3.o", "O8+(2).S3.o", {2880, 3150, 22400}},
      {70, "G2(3)", "PSL(3,3).2", {52, 117, 208}},
      {71, "G2(4).o", "SL(3,4).2.o", {126, 945, 1008}},
      {72, "G2(5)", "SU(3,5).2", {1575, 3024, 3150}},
      {73, "2F4(2)'", "PSL(3,3).2", {312, 351, 936}},
      {74, "2E6(2).o", "F4(2).o", {48620, 2909907, 20155200}},
  };
  return rows;
}

}  // namespace

Params parse_params(const std::string& s) {
  Params out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw Error("expected key=value, got '" + tok + "'");
    std::string k = tok.substr(0, eq), v = tok.substr(eq + 1);
    if (v == "+" || v == "plus") {
      out[k] = 1;
      continue;
    }
    if (v == "-" || v == "minus") {
      out[k] = -1;
      continue;
    }
    size_t used = 0;
    int64_t x = 0;
    try {
      x = std::stoll(v, &used);
    } catch (...) {
      used = 0;
    }
    if (used == 0 || used != v.size()) throw Error("parameter " + k + " is not an integer: '" + v + "'");
    out[k] = x;
  }
  return out;
}

int64_t gaussian_binomial(int m, int k, int q) {
  if (m < 0 || q < 2) throw Error("gaussian binomial needs m >= 0 and q >= 2");
  return narrow(gauss(m, k, q));
}

int64_t RankFourRow::degree() const {
  int64_t s = 1;
  for (auto t : terms) s += t;
  return s;
}

std::vector<std::string> rank_four_params(int row) {
  switch (row) {
    case 1: case 2: case 46: case 47: return {"n"};
    case 22: return {"n", "q"};
    case 23: case 24: case 40: case 44: case 45: case 56: case 57: case 66: case 67: case 68: case 69: return {"q"};
    case 58: return {"m", "q"};
    case 59: return {"m"};
    case 60: case 61: return {"m", "sign"};
    default: return {};
  }
}

RankFourRow rank_four_row(int row, const Params& p) {
  if (row < 1 || row > kRankFourRows) throw Error("row must be in 1.." + std::to_string(kRankFourRows));
  RankFourRow r;
  r.row = row;
  std::string what = "row " + std::to_string(row);
  for (const auto& c : const_rows())
    if (c.row == row) {
      r.group = c.group;
      r.stabilizer = c.stab;
      r.terms = c.terms;
      return r;
    }
  r.parametric = true;
  auto T = [&](I v) { r.terms.push_back(narrow(v)); };
  switch (row) {
    case 1:
    case 2: {
      I n = need(p, "n", 5, what);
      r.group = row == 1 ? "A_n" : "S_n";
      r.stabilizer = row == 1 ? "3:S_(n-3)" : "S3 x S_(n-3)";
      T(exact((n - 3) * (n - 4) * (n - 5), 6, what));
      T(exact(3 * (n - 3) * (n - 4), 2, what));
      T(3 * (n - 3));
      break;
    }
    case 22: {
      int64_t n = need(p, "n", 6, what);
      I q = need_q(p, what);
      r.group = "PSL(n,q).o";
      r.stabilizer = "3-subspace stabilizer";
      I a = ipow(q, n - 3) - 1, b = ipow(q, n - 4) - 1, c = ipow(q, n - 5) - 1, q3 = ipow(q, 3) - 1;
      T(exact(q * a * q3, (q - 1) * (q - 1), what));
      T(exact(ipow(q, 4) * a * b * q3, (q * q - 1) * (q - 1) * (q - 1), what));
      T(exact(ipow(q, 9) * a * b * c, q3 * (q * q - 1) * (q - 1), what));
      break;
    }
    case 23: {
      I q = need_q(p, what);
      r.group = "PSL(6,q).o (graph automorphism)";
      r.stabilizer = "3-subspace stabilizer";
      I s = q * q + q + 1;
      T(q * s * s);
      T(ipow(q, 4) * s * s);
      T(ipow(q, 4));
      break;
    }
    case 24: {
      I q = need_q(p, what);
      r.group = "PSL(3,q).o (graph automorphism)";
      r.stabilizer = "point-line flag pair";
      T(2 * q);
      T(2 * q * q);
      T(q * q * q);
      break;
    }
    case 40:
    case 56: {
      I q = need_q(p, what);
      r.group = row == 40 ? "PSp(6,q).o" : "O7(q).o";
      r.stabilizer = "maximal totally singular 3-subspace stabilizer";
      I s = q * q + q + 1;
      T(q * s);
      T(ipow(q, 3) * s);
      T(ipow(q, 6));
      break;
    }
    case 44: {
      I q = need_q(p, what);
      r.group = "PSU(6,q).o";
      r.stabilizer = "maximal totally isotropic 3-subspace stabilizer";
      I s = ipow(q, 4) + q * q + 1;
      T(q * s);
      T(ipow(q, 4) * s);
      T(ipow(q, 9));
      break;
    }
    case 45: {
      I q = need_q(p, what);
      r.group = "PSU(7,q).o";
      r.stabilizer = "maximal totally isotropic 3-subspace stabilizer";
      I s = ipow(q, 4) + q * q + 1;
      T(ipow(q, 3) * s);
      T(ipow(q, 8) * s);
      T(ipow(q, 15));
      break;
    }
    case 46: {
      int64_t n = need(p, "n", 3, what);
      r.group = "PSigmaU(n,3).o";
      r.stabilizer = "non-singular point stabilizer";
      r.leading_one = false;
      I e = sgn(n - 1);
      T(exact(ipow(3, n - 2) * (ipow(3, n - 1) - e), 4, what));
      T((ipow(3, n - 1) - e) * (ipow(3, n - 2) + e));
      T(ipow(3, n - 2) * (ipow(3, n - 1) - e));
      break;
    }
    case 47: {
      int64_t n = need(p, "n", 3, what);
      r.group = "PSigmaU(n,4).o";
      r.stabilizer = "non-singular point stabilizer";
      r.leading_one = false;
      I e = sgn(n - 1);
      T(exact(ipow(4, n - 2) * (ipow(4, n - 1) - e), 5, what));
      T(ipow(4, n - 2) * (ipow(4, n - 1) + 3 * e));
      T(2 * ipow(4, n - 2) * (ipow(4, n - 1) - e));
      break;
    }
    case 57: {
      I q = need_q(p, what);
      r.group = "O8-(q).o";
      r.stabilizer = "maximal totally singular 3-subspace stabilizer";
      I s = q * q + q + 1;
      T(q * q * s);
      T(ipow(q, 5) * s);
      T(ipow(q, 9));
      break;
    }
    case 58: {
      int64_t m = need(p, "m", 6, what);
      if (m > 7) throw Error(what + ": m must be 6 or 7");
      I q = need_q(p, what);
      r.group = "PGammaO+(2m,q)";
      r.stabilizer = "maximal totally singular subspace stabilizer (even class)";
      T(q * gauss(m, 2, q));
      T(ipow(q, 6) * gauss(m, 4, q));
      T(ipow(q, 15) * gauss(m, 6, q));
      break;
    }
    case 59: {
      int64_t m = need(p, "m", 3, what);
      r.group = "PGammaO(2m+1,5).o";
      r.stabilizer = "non-singular point stabilizer";
      r.leading_one = false;
      T(exact(ipow(5, m - 1) * (ipow(5, m) + 1), 5, what));
      T(ipow(5, m - 1) * (ipow(5, m) + 1));
      T((ipow(5, m) + 1) * (ipow(5, m - 1) - 1));
      break;
    }
    case 60:
    case 61: {
      int64_t m = need(p, "m", 3, what);
      auto it = p.find("sign");
      if (it == p.end() || (it->second != 1 && it->second != -1)) throw Error(what + " needs sign=+ or sign=-");
      I e = it->second;
      r.leading_one = false;
      r.stabilizer = "non-singular point stabilizer";
      if (row == 60) {
        r.group = e > 0 ? "PGammaO+(2m,4).o" : "PGammaO-(2m,4).o";
        T(ipow(4, 2 * m - 2));
        T(ipow(4, m - 1) * (ipow(4, m - 1) + e));
        T(2 * ipow(4, m - 1) * (ipow(4, m - 1) - e));
      } else {
        r.group = e > 0 ? "PGammaO+(2m,5).o" : "PGammaO-(2m,5).o";
        T(exact(ipow(5, m - 1) * (ipow(5, m - 1) + e), 5, what));
        T(ipow(5, m - 1) * (ipow(5, m) - e));
        T((ipow(5, m - 1) + 1) * (ipow(5, m - 1) - 1));
      }
      break;
    }
    case 66: {
      I q = need_q(p, what);
      r.group = "G2(q).o";
      r.stabilizer = "maximal parabolic";
      r.leading_one = false;
      T(q * (q + 1));
      T(ipow(q, 3) * (q + 1));
      T(ipow(q, 5));
      break;
    }
    case 67: {
      I q = need_q(p, what);
      r.group = "E7(q).o";
      r.stabilizer = "maximal parabolic";
      r.leading_one = false;
      I s = ipow(q, 8) + ipow(q, 4) + 1;
      T(exact(q * s * (ipow(q, 9) - 1), q - 1, what));
      T(ipow(q, 27));
      T(exact(ipow(q, 10) * s * (ipow(q, 9) - 1), q - 1, what));
      break;
    }
    case 68:
    case 69: {
      I q = need_q(p, what);
      r.group = "3D4(q).o";
      r.stabilizer = "maximal parabolic";
      r.leading_one = false;
      if (row == 68) {
        T(ipow(q, 3) * (q + 1));
        T(ipow(q, 7) * (q + 1));
        T(ipow(q, 11));
      } else {
        T(q * (ipow(q, 3) + 1));
        T(ipow(q, 5) * (ipow(q, 3) + 1));
        T(ipow(q, 9));
      }
      break;
    }
    default:
      throw Error("row " + std::to_string(row) + " has no entry");
  }
  return r;
}

int64_t count_formula(const std::string& name, const Params& p) {
  if (name == "gaussian") {
    int64_t m = need(p, "m", 0, name), k = need(p, "k", 0, name), q = need(p, "q", 2, name);
    return narrow(gauss(m, k, q));
  }
  if (name == "m-subspace") {
    I q = need(p, "q", 2, name);
    int64_t k = need(p, "k", 1, name);
    return narrow(exact(ipow(q, 2 * k - 1) - sgn(k) * ipow(q, k - 1), q + 1, name));
  }
  if (name == "unitary-points") {
    int64_t n = need(p, "n", 2, name), q = need(p, "q", 3, name);
    if (q != 3 && q != 4) throw Error(name + " is stated for q = 3 or 4");
    return narrow(exact(ipow(q, n - 1) * (ipow(q, n) - sgn(n)), q + 1, name));
  }
  if (name == "unitary-singular") {
    int64_t n = need(p, "n", 2, name);
    return narrow((ipow(3, n - 1) - sgn(n - 1)) * (ipow(3, n - 2) + sgn(n - 1)));
  }
  if (name.rfind("row", 0) == 0) {
    auto dot = name.find('.');
    std::string rs = name.substr(3, dot == std::string::npos ? std::string::npos : dot - 3);
    int row = 0;
    try {
      row = std::stoi(rs);
    } catch (...) {
      throw Error("unknown formula '" + name + "'");
    }
    auto r = rank_four_row(row, p);
    std::string part = dot == std::string::npos ? "total" : name.substr(dot + 1);
    if (part == "total") return r.degree();
    if (part.size() == 2 && part[0] == 'd' && part[1] >= '1' && part[1] <= '3') return r.terms[part[1] - '1'];
    throw Error("unknown part '" + part + "' (use d1, d2, d3 or total)");
  }
  throw Error("unknown formula '" + name + "'");
}

}  // namespace dtg
