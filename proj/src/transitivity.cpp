#include "dtg/transitivity.hpp"

#include <algorithm>

#include "dtg/error.hpp"

namespace dtg {

Graph orbital_graph(const PermGroup& action, Point rep, Point base) {
  auto subs = orbitals(action, base);
  const Suborbit* d = nullptr;
  for (const auto& s : subs)
    if (std::binary_search(s.points.begin(), s.points.end(), rep)) d = &s;
  if (!d) throw Error("point out of range");
  if (d->index == 0) throw Error("trivial suborbit");
  if (!d->self_paired()) throw Error("suborbit not self-paired");
  StabChain ch = action.chain_with_base({base});
  std::vector<Edge> e;
  e.reserve(static_cast<size_t>(action.degree()) * d->points.size());
  for (Point x = 0; x < action.degree(); ++x) {
    Perm t = ch.transversal(0, x);  // base -> x
    for (Point y : d->points) e.emplace_back(x, t[y]);
  }
  return Graph(action.degree(), e);
}

void validate_automorphisms(const Graph& g, const PermGroup& group) {
  if (group.degree() != g.n())
    throw Error("group degree " + std::to_string(group.degree()) + " does not match n = " + std::to_string(g.n()));
  for (size_t i = 0; i < group.generators().size(); ++i)
    if (!is_automorphism(g, group.generators()[i]))
      throw Error("generator not an automorphism (generator " + std::to_string(i) + ")");
}

DtResult is_distance_transitive(const Graph& g, const PermGroup& group) {
  validate_automorphisms(g, group);
  DtResult r;
  auto orb = group.orbit(0);
  if (static_cast<int>(orb.size()) != g.n()) {
    Vertex v = 0;
    while (std::binary_search(orb.begin(), orb.end(), v)) ++v;
    r.reason = "not vertex-transitive";
    r.witness = std::array<Vertex, 4>{0, 0, v, v};
    return r;
  }
  auto stab = group.stabilizer({0});
  auto dist = bfs_distances(g, 0);
  std::vector<int> first(g.n() + 1, -1);
  std::vector<char> seen(g.n(), 0);
  for (Vertex x = 0; x < g.n(); ++x) {
    if (seen[x]) continue;
    int i = dist[x];
    if (i < 0) throw Error("disconnected graph");
    if (first[i] >= 0) {
      r.reason = "stabilizer not transitive on distance-" + std::to_string(i) + " sphere";
      r.witness = std::array<Vertex, 4>{0, first[i], 0, x};
      return r;
    }
    first[i] = x;
    for (Point y : stab.orbit(x)) seen[y] = 1;
  }
  r.ok = true;
  return r;
}

GeodesicSet enumerate_geodesics(const Graph& g, int s) {
  int d = diameter(g);
  if (s < 0 || s > d) throw Error("s exceeds diameter");
  GeodesicSet out;
  out.s = s;
  std::vector<Vertex> cur;
  for (Vertex u = 0; u < g.n(); ++u) {
    auto dist = bfs_distances(g, u);
    cur.assign(1, u);
    // geodesics from u are exactly the walks that step outward every time
    auto rec = [&](auto&& self) -> void {
      if (static_cast<int>(cur.size()) == s + 1) {
        if (out.tuples.size() >= kMaxTuples) throw Error("geodesic set exceeds 1e7 tuples");
        out.tuples.push_back(cur);
        return;
      }
      int i = static_cast<int>(cur.size()) - 1;
      for (Vertex y : g.neighbors(cur.back()))
        if (dist[y] == i + 1) {
          cur.push_back(y);
          self(self);
          cur.pop_back();
        }
    };
    rec(rec);
  }
  return out;
}

namespace {

std::vector<Point> distinct(const std::vector<Vertex>& t) {
  std::vector<Point> out;
  for (Vertex v : t)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

// stabilizer of the tuple is transitive on ext
bool transitive_on(const PermGroup& group, const std::vector<Vertex>& tuple, const std::vector<Vertex>& ext) {
  if (ext.size() <= 1) return true;
  auto h = group.stabilizer(distinct(tuple));
  auto o = h.orbit(ext[0]);
  for (Vertex x : ext)
    if (!std::binary_search(o.begin(), o.end(), x)) return false;
  return true;
}

}  // namespace

bool is_s_geodesic_transitive(const Graph& g, const PermGroup& group, int s) {
  validate_automorphisms(g, group);
  int d = diameter(g);
  if (s < 1 || s > d) throw Error("s exceeds diameter");
  if (!group.is_transitive()) return false;
  auto dist = bfs_distances(g, 0);
  std::vector<Vertex> geo{0};
  for (int i = 0; i < s; ++i) {
    std::vector<Vertex> ext;
    for (Vertex y : g.neighbors(geo.back()))
      if (dist[y] == i + 1) ext.push_back(y);
    if (ext.empty()) return false;
    if (!transitive_on(group, geo, ext)) return false;
    geo.push_back(ext[0]);
  }
  return true;
}

bool is_s_arc_transitive(const Graph& g, const PermGroup& group, int s) {
  validate_automorphisms(g, group);
  if (s < 1) throw Error("s must be positive");
  if (!group.is_transitive()) return false;
  std::vector<Vertex> arc{0};
  for (int i = 0; i < s; ++i) {
    std::vector<Vertex> ext;
    for (Vertex y : g.neighbors(arc.back()))
      if (arc.size() < 2 || y != arc[arc.size() - 2]) ext.push_back(y);
    if (ext.empty()) return true;  // no longer arcs exist
    if (!transitive_on(group, arc, ext)) return false;
    arc.push_back(ext[0]);
  }
  return true;
}

}  // namespace dtg
