#include "loopon/loops.hpp"

#include <algorithm>
#include <numeric>

namespace loopon {

namespace {

// Weighted union-find with path halving.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

bool is_valid_config(const Domain& g, const std::vector<int>& edge_ids) {
  std::vector<int> degree(g.vertex_count(), 0);
  for (int e : edge_ids) {
    if (e < 0 || e >= static_cast<int>(g.edge_count()))
      throw UsageError("edge id outside domain");
    ++degree[g.edges()[e].first];
    ++degree[g.edges()[e].second];
  }
  for (int d : degree)
    if (d != 0 && d != 2) return false;
  return true;
}

int loop_count(const LoopConfig& k) {
  const Domain& g = *k.domain;
  UnionFind uf(static_cast<int>(g.vertex_count()));
  int cycles = 0;
  for (int e : k.active) {
    auto [a, b] = g.edges()[e];
    if (!uf.unite(a, b)) ++cycles;
  }
  // In a valid configuration every nontrivial component is a single cycle, so
  // each loop closes exactly one edge.
  return cycles;
}

Polygon component_at(const LoopConfig& k, const Vertex& x) {
  const Domain& g = *k.domain;
  int xi = g.vertex_index(x);
  if (xi < 0) throw UsageError("component_at: vertex not in domain");
  std::vector<char> in(g.edge_count(), 0);
  for (int e : k.active) in[e] = 1;
  // Trace the loop through x, if any.
  int start_edge = -1;
  for (auto [e, j] : g.incidence()[xi])
    if (in[e]) {
      start_edge = e;
      break;
    }
  if (start_edge < 0) return Polygon::degenerate(x);
  std::vector<Edge> edges;
  int prev = xi;
  int cur = g.edges()[start_edge].first == xi ? g.edges()[start_edge].second
                                              : g.edges()[start_edge].first;
  edges.push_back(g.edge_vertices(start_edge));
  while (cur != xi) {
    for (auto [e, j] : g.incidence()[cur]) {
      if (in[e] && j != prev) {
        edges.push_back(g.edge_vertices(e));
        prev = cur;
        cur = j;
        break;
      }
    }
  }
  return Polygon::from_edges(g.lattice(), std::move(edges));
}

Domain envelope(const Domain& g, const Polygon& p) {
  auto vs = p.vertex_set();
  for (const Vertex& v : vs)
    if (!g.contains(v)) throw UsageError("envelope: polygon not inside domain");
  return induced_domain(g.lattice(), std::move(vs));
}

nlohmann::json config_to_json(const LoopConfig& k) {
  std::vector<Edge> edges;
  for (int e : k.active) edges.push_back(k.domain->edge_vertices(e));
  std::sort(edges.begin(), edges.end());
  nlohmann::json out = nlohmann::json::array();
  for (const Edge& e : edges) out.push_back({e.first, e.second});
  return out;
}

}  // namespace loopon
