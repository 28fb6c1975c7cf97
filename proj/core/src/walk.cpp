#include "loopon/walk.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace loopon {

bool is_self_avoiding_walk(const LatticeKind& lattice, const Walk& w) {
  if (w.sites.empty()) return false;
  std::set<Vertex> seen;
  for (std::size_t i = 0; i < w.sites.size(); ++i) {
    if (!seen.insert(w.sites[i]).second) return false;
    if (i > 0 && !adjacent(lattice, w.sites[i - 1], w.sites[i])) return false;
  }
  return true;
}

Polygon Polygon::from_edges(const LatticeKind& lattice,
                            std::vector<Edge> edges) {
  if (edges.empty()) throw UsageError("polygon from empty edge set");
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw UsageError("polygon has duplicate edges");
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const Edge& e : edges) {
    if (!adjacent(lattice, e.first, e.second))
      throw UsageError("polygon edge is not a lattice edge");
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  for (const auto& [v, nbrs] : adj)
    if (nbrs.size() != 2) throw UsageError("polygon vertex degree != 2");
  if (adj.size() != edges.size())
    throw UsageError("polygon edge/vertex count mismatch");
  // Single cycle: walk from any vertex must visit everything.
  Vertex start = adj.begin()->first;
  Vertex prev = start, cur = adj[start][0];
  std::size_t steps = 1;
  while (cur != start) {
    const auto& nbrs = adj[cur];
    Vertex next = (nbrs[0] == prev) ? nbrs[1] : nbrs[0];
    prev = cur;
    cur = next;
    ++steps;
  }
  if (steps != edges.size()) throw UsageError("polygon is not a single cycle");
  Polygon p;
  p.edges = std::move(edges);
  p.base = start;
  return p;
}

std::vector<Vertex> Polygon::vertex_set() const {
  if (is_degenerate()) return {base};
  std::set<Vertex> vs;
  for (const Edge& e : edges) {
    vs.insert(e.first);
    vs.insert(e.second);
  }
  return {vs.begin(), vs.end()};
}

bool Polygon::contains_vertex(const Vertex& v) const {
  if (is_degenerate()) return v == base;
  for (const Edge& e : edges)
    if (e.first == v || e.second == v) return true;
  return false;
}

Polygon close_walk(const LatticeKind& lattice, const Walk& w) {
  if (w.length() < 3) throw UsageError("walk too short to close");
  if (!adjacent(lattice, w.sites.front(), w.sites.back()))
    throw UsageError("walk endpoints are not adjacent");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < w.sites.size(); ++i)
    edges.push_back(make_edge(w.sites[i], w.sites[i + 1]));
  edges.push_back(make_edge(w.sites.front(), w.sites.back()));
  return Polygon::from_edges(lattice, std::move(edges));
}

}  // namespace loopon
