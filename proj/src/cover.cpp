#include "dtg/cover.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dtg/error.hpp"

namespace dtg {

VertexPartition VertexPartition::from_blocks(int n, std::vector<std::vector<Vertex>> blocks) {
  VertexPartition p;
  p.block_of.assign(n, -1);
  for (auto& b : blocks) {
    if (b.empty()) throw Error("partition has an empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks.begin(), blocks.end());
  for (size_t i = 0; i < blocks.size(); ++i)
    for (Vertex v : blocks[i]) {
      if (v < 0 || v >= n) throw Error("partition vertex " + std::to_string(v) + " out of range");
      if (p.block_of[v] != -1) throw Error("partition blocks are not disjoint (vertex " + std::to_string(v) + ")");
      p.block_of[v] = static_cast<int>(i);
    }
  for (int v = 0; v < n; ++v)
    if (p.block_of[v] == -1) throw Error("partition does not cover vertex " + std::to_string(v));
  p.blocks = std::move(blocks);
  return p;
}

bool VertexPartition::trivial() const {
  return blocks.size() <= 1 || blocks.size() == block_of.size();
}

Graph quotient(const Graph& g, const VertexPartition& p) {
  if (p.n() != g.n()) throw Error("partition size does not match the graph");
  if (p.trivial()) throw Error("partition must be nontrivial");
  std::vector<Edge> e;
  for (const auto& [u, v] : g.edges()) {
    int a = p.block_of[u], b = p.block_of[v];
    if (a != b) e.emplace_back(std::min(a, b), std::max(a, b));
  }
  return Graph(static_cast<int>(p.size()), e);
}

std::string CoverCheck::str() const {
  if (ok) return "cover";
  if (!witness) return "not a cover";
  return "vertex " + std::to_string(witness->first) + " has " + std::to_string(count) + " neighbours in block " +
         std::to_string(witness->second);
}

CoverCheck is_cover(const Graph& g, const VertexPartition& p) {
  if (p.n() != g.n()) throw Error("partition size does not match the graph");
  CoverCheck r;
  // a cover needs no edges inside blocks, and |N(u) ∩ C| = 1 for each block C adjacent to block(u)
  std::vector<int> cnt(p.size(), 0);
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex w : g.neighbors(u)) ++cnt[p.block_of[w]];
    for (Vertex w : g.neighbors(u)) {
      int c = p.block_of[w];
      if (cnt[c] != 1 || c == p.block_of[u]) {
        r.witness = std::make_pair(u, c);
        r.count = cnt[c];
        return r;
      }
    }
    for (Vertex w : g.neighbors(u)) cnt[p.block_of[w]] = 0;
  }
  // every vertex of B sees C when some vertex of B does
  for (const auto& [u, v] : g.edges()) {
    int b = p.block_of[u], c = p.block_of[v];
    for (int side = 0; side < 2; ++side) {
      for (Vertex x : p.blocks[b]) {
        bool hit = false;
        for (Vertex w : g.neighbors(x))
          if (p.block_of[w] == c) hit = true;
        if (!hit) {
          r.witness = std::make_pair(x, c);
          r.count = 0;
          return r;
        }
      }
      std::swap(b, c);
    }
  }
  r.ok = true;
  return r;
}

VertexPartition orbit_partition(const PermGroup& group, int n) {
  if (group.degree() != n) throw Error("group degree does not match the vertex count");
  return VertexPartition::from_blocks(n, group.orbits());
}

bool normalizes(const PermGroup& G, const PermGroup& N) {
  for (const auto& g : G.generators()) {
    Perm gi = g.inverse();
    for (const auto& h : N.generators())
      if (!N.contains(gi * h * g)) return false;
  }
  return true;
}

uint64_t stab_t(int64_t k, int64_t b3) {
  if (k < 3 || b3 < 1) throw Error("stab_divisibility needs k >= 3 and b3 >= 1");
  return mul_checked(mul_checked(static_cast<uint64_t>(k), static_cast<uint64_t>((k - 1) * (k - 1))),
                     static_cast<uint64_t>(b3));
}

bool stab_divisibility(int64_t k, int64_t b3, uint64_t aut_block_order) {
  if (aut_block_order < 1) throw Error("stab_divisibility needs |A_B| >= 1");
  return aut_block_order % stab_t(k, b3) == 0;
}

Report check_hypothesis(const Graph& g, const Graph& sigma, const VertexPartition& p) {
  Report r;
  r.suite = "hypothesis";
  auto cov = is_cover(g, p);
  r.add({"cover", "the graph covers its quotient", cov.ok ? Status::Pass : Status::Fail, cov.str(), "cover",
         "derived", "", 0});
  Graph q = quotient(g, p);
  if (!(q == sigma)) r.add({"quotient", "sigma equals the quotient", Status::Fail, "differs", "equal", "derived", "", 0});
  auto gg = girth(g), gs = girth(sigma);
  json pair = {gg ? json(*gg) : json("inf"), gs ? json(*gs) : json("inf")};
  bool pair_ok = gg && gs && ((*gg == 6 && *gs == 5) || (*gg == 7 && *gs == 6));
  r.add({"girth-pair", "(girth, quotient girth) in {(6,5),(7,6)}", pair_ok ? Status::Pass : Status::Fail, pair,
         json::array({json::array({6, 5}), json::array({7, 6})}), "stated", "", 0});
  int d = is_connected(sigma) ? diameter(sigma) : -1;
  r.add({"quotient-diameter", "quotient diameter at least 3", d >= 3 ? Status::Pass : Status::Fail, d, ">= 3",
         "stated", "", 0});
  r.add({"blocks", "at least 3 blocks", p.size() >= 3 ? Status::Pass : Status::Fail, p.size(), ">= 3", "stated", "",
         0});
  return r;
}

ForcingChain girth7_forcing_chain(const Graph& sigma) {
  ForcingChain fc;
  auto k = sigma.valency();
  if (!k) throw Error("quotient is not regular");
  fc.k = *k;
  auto gs = girth(sigma);
  if (!gs || *gs != 6) throw Error("forcing chain needs a girth-6 quotient");
  fc.girth_sigma = 6;
  fc.girth_cover = 7;
  auto arr = require_intersection_array(sigma);
  if (arr.d() < 3) throw Error("forcing chain needs quotient diameter >= 3");
  int64_t kk = fc.k;
  // girth 7: no cycles of length <= 6, so c_i = 1 for i <= 3 and a_i = 0 for i <= 2
  fc.steps.push_back({1, 0, kk - 1, 1, "girth 7: no triangles, unique common neighbour"});
  fc.steps.push_back({2, 0, kk - 1, 1, "girth 7: no 5-cycles, no 4- or 6-cycles"});
  // odd girth 2*3+1 puts a 7-cycle through a 3-geodesic, so a3 >= 1; b3 = 1 is excluded by the
  // classification of geodesic-transitive arrays {k,k-1,k-1,1;1,1,1,...}
  int64_t c3 = 1, b3 = 2, a3 = kk - b3 - c3;
  if (a3 < 1) throw Error("forcing chain does not apply at this valency");
  fc.steps.push_back({3, a3, b3, c3, "odd girth forces a3 >= 1; b3 >= 2 (b3 = 1 excluded by the array classification)"});
  fc.c3_sigma_lower = 1 + b3;
  fc.c3_sigma = arr.c(3);
  return fc;
}

VertexPartition parse_partition(const std::string& text, int n) {
  std::vector<std::vector<Vertex>> blocks;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto h = line.find('#');
    if (h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::vector<Vertex> b;
    std::string tok;
    while (ls >> tok) {
      try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        b.push_back(v);
      } catch (const std::exception&) {
        throw Error("partition line " + std::to_string(lineno) + ": bad vertex '" + tok + "'");
      }
    }
    if (!b.empty()) blocks.push_back(b);
  }
  return VertexPartition::from_blocks(n, blocks);
}

std::string write_partition(const VertexPartition& p) {
  std::string out;
  for (const auto& b : p.blocks) {
    for (size_t i = 0; i < b.size(); ++i) out += (i ? " " : "") + std::to_string(b[i]);
    out += "\n";
  }
  return out;
}

}  // namespace dtg
