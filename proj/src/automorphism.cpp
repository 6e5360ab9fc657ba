#include "dtg/automorphism.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "dtg/error.hpp"

namespace dtg {

namespace {

// ordered partition: cells are runs of elem[]; a cell is named by its first position
struct Partition {
  std::vector<int> elem, pos, start_of, cend;
  int ncells = 0;

  explicit Partition(int n) : elem(n), pos(n), start_of(n, 0), cend(n, 0) {
    std::iota(elem.begin(), elem.end(), 0);
    std::iota(pos.begin(), pos.end(), 0);
    if (n) cend[0] = n;
    ncells = n ? 1 : 0;
  }
  bool discrete() const { return ncells == static_cast<int>(elem.size()); }
  // first smallest non-singleton cell
  int target() const {
    int best = -1, bsz = INT32_MAX;
    for (int s = 0; s < static_cast<int>(elem.size()); s = cend[s]) {
      int sz = cend[s] - s;
      if (sz > 1 && sz < bsz) {
        best = s;
        bsz = sz;
      }
    }
    return best;
  }
};

inline uint64_t mix(uint64_t h, uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdULL;
}

class Refiner {
 public:
  explicit Refiner(const Graph& g) : g_(g), cnt_(g.n(), 0), inq_(g.n(), 0) {}

  // make p equitable starting from the given splitters; returns a labelling-invariant trace hash
  uint64_t refine(Partition& p, std::vector<int> splitters) {
    uint64_t h = 0x12345;
    std::deque<int> q;
    for (int s : splitters) {
      q.push_back(s);
      inq_[s] = 1;
    }
    std::vector<int> touched, cells, wv;
    while (!q.empty() && !p.discrete()) {
      int w = q.front();
      q.pop_front();
      inq_[w] = 0;
      wv.assign(p.elem.begin() + w, p.elem.begin() + p.cend[w]);
      touched.clear();
      for (int x : wv)
        for (Vertex y : g_.neighbors(x))
          if (cnt_[y]++ == 0) touched.push_back(y);
      cells.clear();
      for (int y : touched) cells.push_back(p.start_of[y]);
      std::sort(cells.begin(), cells.end());
      cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
      h = mix(h, static_cast<uint64_t>(w) << 32 | cells.size());
      for (int s : cells) {
        int e = p.cend[s];
        std::sort(p.elem.begin() + s, p.elem.begin() + e, [&](int a, int b) { return cnt_[a] < cnt_[b]; });
        // fragments
        std::vector<int> fstart;
        for (int i = s; i < e; ++i) {
          if (i == s || cnt_[p.elem[i]] != cnt_[p.elem[i - 1]]) {
            fstart.push_back(i);
            h = mix(h, static_cast<uint64_t>(i) << 32 | static_cast<uint32_t>(cnt_[p.elem[i]]));
          }
          p.pos[p.elem[i]] = i;
        }
        if (fstart.size() == 1) continue;
        fstart.push_back(e);
        int largest = 0;
        for (size_t f = 0; f + 1 < fstart.size(); ++f) {
          int a = fstart[f], b = fstart[f + 1];
          p.cend[a] = b;
          for (int i = a; i < b; ++i) p.start_of[p.elem[i]] = a;
          if (b - a > fstart[largest + 1] - fstart[largest]) largest = static_cast<int>(f);
        }
        p.ncells += static_cast<int>(fstart.size()) - 2;
        bool was_queued = inq_[s];
        for (size_t f = 0; f + 1 < fstart.size(); ++f) {
          int a = fstart[f];
          if (inq_[a]) continue;
          if (!was_queued && static_cast<int>(f) == largest) continue;
          inq_[a] = 1;
          q.push_back(a);
        }
      }
      for (int y : touched) cnt_[y] = 0;
    }
    for (int s : q) inq_[s] = 0;
    return mix(h, static_cast<uint64_t>(p.ncells));
  }

  static void individualize(Partition& p, int v) {
    int s = p.start_of[v], e = p.cend[s];
    int pv = p.pos[v];
    std::swap(p.elem[s], p.elem[pv]);
    p.pos[p.elem[pv]] = pv;
    p.pos[v] = s;
    p.cend[s] = s + 1;
    p.cend[s + 1] = e;
    for (int i = s + 1; i < e; ++i) p.start_of[p.elem[i]] = s + 1;
    ++p.ncells;
  }

 private:
  const Graph& g_;
  std::vector<int> cnt_;
  std::vector<char> inq_;
};

struct FirstPath {
  std::vector<Partition> nodes;   // nodes[i] is equitable, nodes.back() discrete
  std::vector<int> vertex;        // vertex individualized at nodes[i]
  std::vector<uint64_t> trace;    // trace of nodes[i]
};

FirstPath first_path(const Graph& g, Refiner& r) {
  FirstPath fp;
  Partition p(g.n());
  fp.trace.push_back(r.refine(p, {0}));
  fp.nodes.push_back(p);
  while (!fp.nodes.back().discrete()) {
    Partition c = fp.nodes.back();
    int t = c.target();
    int v = c.elem[t];
    fp.vertex.push_back(v);
    Refiner::individualize(c, v);
    fp.trace.push_back(r.refine(c, {t}));
    fp.nodes.push_back(std::move(c));
  }
  return fp;
}

bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<Point>& map) {
  for (int u = 0; u < a.n(); ++u) {
    if (a.degree(u) != b.degree(map[u])) return false;
    for (Vertex v : a.neighbors(u))
      if (u < v && !b.has_edge(map[u], map[v])) return false;
  }
  return true;
}

// depth-first search below node for a leaf whose traces follow ref and whose labelling gives an isomorphism
class LeafSearch {
 public:
  LeafSearch(const Graph& from, const Graph& to, const FirstPath& ref, uint64_t budget, uint64_t& nodes)
      : from_(from), to_(to), ref_(ref), budget_(budget), nodes_(nodes), r_(to) {}

  Refiner& refiner() { return r_; }

  std::optional<std::vector<Point>> search(const Partition& p, size_t depth) {
    if (++nodes_ > budget_) throw BudgetExceeded("budget exceeded (" + std::to_string(budget_) + " nodes)");
    if (p.discrete()) {
      const auto& leaf1 = ref_.nodes.back().elem;
      std::vector<Point> map(from_.n());
      for (int i = 0; i < from_.n(); ++i) map[leaf1[i]] = p.elem[i];
      if (is_isomorphism(from_, to_, map)) return map;
      return std::nullopt;
    }
    if (depth + 1 >= ref_.nodes.size()) return std::nullopt;
    int t = p.target();
    int e = p.cend[t];
    std::vector<int> cell(p.elem.begin() + t, p.elem.begin() + e);
    for (int v : cell) {
      Partition c = p;
      Refiner::individualize(c, v);
      if (r_.refine(c, {t}) != ref_.trace[depth + 1]) continue;
      if (auto m = search(c, depth + 1)) return m;
    }
    return std::nullopt;
  }

 private:
  const Graph& from_;
  const Graph& to_;
  const FirstPath& ref_;
  uint64_t budget_;
  uint64_t& nodes_;
  Refiner r_;
};

struct UnionFind {
  std::vector<int> parent, size;
  explicit UnionFind(int n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

}  // namespace

AutGroup automorphism_group(const Graph& g, uint64_t budget) {
  if (g.n() > kMaxAutVertices) throw Error("graph too large for the automorphism solver (n > 5000)");
  AutGroup res;
  res.n = g.n();
  if (g.n() == 0) return res;
  Refiner r(g);
  FirstPath fp = first_path(g, r);
  res.base = fp.vertex;
  LeafSearch ls(g, g, fp, budget, res.nodes);
  UnionFind uf(g.n());
  size_t k = fp.vertex.size();
  res.orbit_sizes.assign(k, 1);
  // deepest level first: generators found at level l fix base[0..l-1]
  for (size_t l = k; l-- > 0;) {
    const Partition& node = fp.nodes[l];
    int t = node.target();
    int vl = fp.vertex[l];
    std::vector<int> cell(node.elem.begin() + t, node.elem.begin() + node.cend[t]);
    std::vector<int> rejected;
    for (int w : cell) {
      if (uf.find(w) == uf.find(vl)) continue;
      bool skip = false;
      for (int x : rejected)
        if (uf.find(x) == uf.find(w)) {
          skip = true;
          break;
        }
      if (skip) continue;
      Partition c = node;
      Refiner::individualize(c, w);
      std::optional<std::vector<Point>> m;
      if (ls.refiner().refine(c, {t}) == fp.trace[l + 1]) m = ls.search(c, l + 1);
      if (!m) {
        rejected.push_back(w);
        continue;
      }
      Perm gamma(*m);
      for (int x = 0; x < g.n(); ++x) uf.unite(x, gamma[x]);
      res.generators.push_back(std::move(gamma));
    }
    res.orbit_sizes[l] = static_cast<uint64_t>(uf.size[uf.find(vl)]);
  }
  for (auto s : res.orbit_sizes) res.order = mul_checked(res.order, s);
  return res;
}

std::optional<Perm> find_isomorphism(const Graph& a, const Graph& b, uint64_t budget) {
  if (a.n() != b.n() || a.m() != b.m()) return std::nullopt;
  if (a.n() > kMaxAutVertices) throw Error("graph too large for the isomorphism test (n > 5000)");
  if (a.n() == 0) return Perm(0);
  std::vector<int> da, db;
  for (int v = 0; v < a.n(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;
  Refiner ra(a);
  FirstPath fp = first_path(a, ra);
  uint64_t nodes = 0;
  LeafSearch ls(a, b, fp, budget, nodes);
  Partition p(b.n());
  if (ls.refiner().refine(p, {0}) != fp.trace[0]) return std::nullopt;
  auto m = ls.search(p, 0);
  if (!m) return std::nullopt;
  return Perm(*m);
}

}  // namespace dtg
