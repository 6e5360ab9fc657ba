#include "dtg/golay.hpp"

#include <algorithm>
#include <sstream>

#include "dtg/error.hpp"

namespace dtg {

namespace {

// "(1,2,3)(4,6,5)" with 1-based points
Perm cycles_1based(int n, const std::string& text) {
  std::vector<std::vector<Point>> cycles;
  std::vector<Point> cur;
  std::string num;
  for (char ch : text) {
    if (isdigit(static_cast<unsigned char>(ch))) {
      num += ch;
      continue;
    }
    if (!num.empty()) {
      cur.push_back(std::stoi(num) - 1);
      num.clear();
    }
    if (ch == ')') {
      cycles.push_back(cur);
      cur.clear();
    }
  }
  return Perm::from_cycles(n, cycles);
}

}  // namespace

std::vector<Perm> golay_c12_permutations() {
  const char* a[] = {
      "(1,2,3)", "(4,5,6)", "(7,8,9)", "(10,11,12)", "(13,14,15)", "(16,17,18)",
      "(1,2,3)(4,6,5)(7,9,8)(10,11,12)(13,14,15)",
      "(1,3,2)(4,6,5)(7,8,9)(10,11,12)(16,18,17)",
      "(1,2,3)(4,6,5)(7,8,9)(13,15,14)(16,17,18)",
      "(1,2,3)(4,5,6)(10,11,12)(13,15,14)(16,18,17)",
      "(4,5,6)(7,8,9)(10,11,12)(13,14,15)(16,17,18)",
      "(1,2,3)(7,8,9)(10,12,11)(13,14,15)(16,18,17)",
  };
  std::vector<Perm> out;
  for (auto s : a) out.push_back(cycles_1based(18, s));
  return out;
}

std::vector<Perm> golay_c22_permutations() {
  std::vector<Perm> out;
  for (int j = 1; j <= 10; ++j)
    out.push_back(cycles_1based(20, "(" + std::to_string(2 * j - 1) + "," + std::to_string(2 * j) + ")"));
  const char* a[] = {
      "(1,2)(3,4)(5,6)(7,8)(9,10)(15,16)",
      "(1,2)(3,4)(7,8)(13,14)(17,18)",
      "(1,2)(3,4)(11,12)(13,14)(15,16)(19,20)",
      "(1,2)(3,4)(9,10)(11,12)(15,16)(17,18)",
      "(3,4)(5,6)(11,12)(13,14)(17,18)(19,20)",
      "(5,6)(7,8)(13,14)(15,16)(19,20)",
      "(1,2)(5,6)(7,8)(11,12)(13,14)(15,16)(17,18)",
      "(3,4)(7,8)(9,10)(13,14)(15,16)(17,18)(19,20)",
      "(5,6)(9,10)(11,12)(15,16)(17,18)(19,20)",
      "(1,2)(5,6)(7,8)(9,10)(17,18)(19,20)",
      "(3,4)(7,8)(9,10)(11,12)(19,20)",
      "(1,2)(5,6)(9,10)(11,12)(13,14)",
  };
  for (auto s : a) out.push_back(cycles_1based(20, s));
  return out;
}

std::vector<int> block_coordinates(const Perm& g, int p) {
  if (g.degree() % p) throw Error("degree is not a multiple of the block size");
  int r = g.degree() / p;
  std::vector<int> c(r, 0);
  for (int j = 0; j < r; ++j) {
    int base = j * p;
    int e = g[base] - base;
    if (e < 0 || e >= p) throw Error("permutation does not preserve the blocks");
    for (int i = 0; i < p; ++i)
      if (g[base + i] != base + (i + e) % p) throw Error("permutation is not a product of block cycles");
    c[j] = e;
  }
  return c;
}

Graph cayley_abelian(int p, int r, const std::vector<std::vector<int>>& S) {
  uint64_t nv = 1;
  for (int i = 0; i < r; ++i) {
    nv *= static_cast<uint64_t>(p);
    if (nv > 5000) throw Error("unsupported parameters: more than 5000 vertices");
  }
  auto idx = [&](const std::vector<int>& v) {
    int x = 0;
    for (int i = r; i-- > 0;) x = x * p + v[i];
    return x;
  };
  std::vector<int> sidx;
  for (auto s : S) {
    if (static_cast<int>(s.size()) != r) throw Error("connection-set element has the wrong length");
    for (auto& x : s) x = ((x % p) + p) % p;
    sidx.push_back(idx(s));
  }
  std::sort(sidx.begin(), sidx.end());
  sidx.erase(std::unique(sidx.begin(), sidx.end()), sidx.end());
  auto coords = [&](int x) {
    std::vector<int> v(r);
    for (int i = 0; i < r; ++i) {
      v[i] = x % p;
      x /= p;
    }
    return v;
  };
  auto add = [&](int x, int y) {
    auto a = coords(x), b = coords(y);
    for (int i = 0; i < r; ++i) a[i] = (a[i] + b[i]) % p;
    return idx(a);
  };
  auto neg = [&](int x) {
    auto a = coords(x);
    for (auto& c : a) c = (p - c) % p;
    return idx(a);
  };
  for (int s : sidx) {
    if (s == 0) throw Error("connection set contains the identity");
    if (!std::binary_search(sidx.begin(), sidx.end(), neg(s))) throw Error("connection set not inverse-closed");
  }
  // <S> = whole group, by closure from 0
  std::vector<char> seen(nv, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  size_t reached = 1;
  std::vector<Edge> edges;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int s : sidx) {
      int v = add(u, s);
      if (u < v) edges.emplace_back(u, v);
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  if (reached != nv) throw Error("connection set does not generate the group");
  Graph g(static_cast<int>(nv), edges);
  for (uint64_t x = 0; x < nv; ++x) {
    std::string lab;
    for (int c : coords(static_cast<int>(x))) lab += static_cast<char>('0' + c);
    g.labels.push_back(lab);
  }
  return g;
}

Graph golay_c12() {
  auto a = golay_c12_permutations();
  std::vector<std::vector<int>> S;
  for (const auto& g : a) {
    S.push_back(block_coordinates(g, 3));
    S.push_back(block_coordinates(g.inverse(), 3));
  }
  return cayley_abelian(3, 6, S);
}

Graph golay_c22() {
  std::vector<std::vector<int>> S;
  for (const auto& g : golay_c22_permutations()) S.push_back(block_coordinates(g, 2));
  return cayley_abelian(2, 10, S);
}

std::vector<uint32_t> binary_golay23() {
  const uint32_t gen = (1u << 0) | (1u << 2) | (1u << 4) | (1u << 5) | (1u << 6) | (1u << 10) | (1u << 11);
  std::vector<uint32_t> words;
  for (uint32_t m = 0; m < (1u << 12); ++m) {
    uint32_t w = 0;
    for (int i = 0; i < 12; ++i)
      if (m >> i & 1) w ^= gen << i;
    words.push_back(w);
  }
  std::sort(words.begin(), words.end());
  return words;
}

namespace {

uint32_t mod_gen(uint32_t w) {
  const uint32_t gen = (1u << 0) | (1u << 2) | (1u << 4) | (1u << 5) | (1u << 6) | (1u << 10) | (1u << 11);
  for (int i = 22; i >= 11; --i)
    if (w >> i & 1) w ^= gen << (i - 11);
  return w;
}

}  // namespace

Graph golay_c23_coset_graph() {
  std::vector<std::vector<int>> S;
  for (int i = 0; i < 23; ++i) {
    uint32_t s = mod_gen(1u << i);
    std::vector<int> v(11);
    for (int b = 0; b < 11; ++b) v[b] = s >> b & 1;
    S.push_back(v);
  }
  return cayley_abelian(2, 11, S);
}

Graph m23_octad_graph() {
  std::vector<uint32_t> octads;
  for (uint32_t w : binary_golay23()) {
    int wt = __builtin_popcount(w);
    // extended word has weight wt + parity; octads avoiding the parity coordinate are weight-8 words of C23
    if (wt == 8) octads.push_back(w);
  }
  std::vector<Edge> e;
  int n = static_cast<int>(octads.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((octads[i] & octads[j]) == 0) e.emplace_back(i, j);
  Graph g(n, e);
  for (uint32_t w : octads) {
    std::string lab;
    for (int b = 0; b < 23; ++b)
      if (w >> b & 1) lab += (lab.empty() ? "" : ",") + std::to_string(b);
    g.labels.push_back("{" + lab + "}");
  }
  return g;
}

}  // namespace dtg
