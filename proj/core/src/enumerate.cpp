#include "loopon/enumerate.hpp"

#include <algorithm>

namespace loopon {

namespace {

// DFS over edges in index order. Each vertex tracks its degree so far and the
// number of its incident edges not yet decided; a branch dies as soon as a
// vertex can no longer end at degree 0 or 2.
struct SubsetSearch {
  const std::vector<std::pair<int, int>>& edges;
  const std::function<void(const std::vector<int>&)>& fn;
  std::vector<int> degree;
  std::vector<int> undecided;
  std::vector<int> active;

  SubsetSearch(std::size_t vertex_count,
               const std::vector<std::pair<int, int>>& edges_,
               const std::function<void(const std::vector<int>&)>& f)
      : edges(edges_), fn(f), degree(vertex_count, 0),
        undecided(vertex_count, 0) {
    for (const auto& [a, b] : edges) {
      ++undecided[a];
      ++undecided[b];
    }
  }

  bool vertex_ok(int v) const {
    if (degree[v] > 2) return false;
    if (undecided[v] == 0) return degree[v] == 0 || degree[v] == 2;
    // degree 1 can still be fixed while edges remain undecided
    return true;
  }

  void recurse(int e) {
    if (e == static_cast<int>(edges.size())) {
      fn(active);
      return;
    }
    auto [a, b] = edges[e];
    --undecided[a];
    --undecided[b];
    // Exclude e.
    if (vertex_ok(a) && vertex_ok(b)) recurse(e + 1);
    // Include e.
    ++degree[a];
    ++degree[b];
    if (vertex_ok(a) && vertex_ok(b)) {
      active.push_back(e);
      recurse(e + 1);
      active.pop_back();
    }
    --degree[a];
    --degree[b];
    ++undecided[a];
    ++undecided[b];
  }
};

}  // namespace

void enumerate_valid_edge_subsets(
    std::size_t vertex_count, const std::vector<std::pair<int, int>>& edges,
    const std::function<void(const std::vector<int>&)>& fn, int edge_cap) {
  if (static_cast<int>(edges.size()) > edge_cap)
    throw CapError("subgraph has " + std::to_string(edges.size()) +
                   " edges, above the enumeration cap " +
                   std::to_string(edge_cap));
  SubsetSearch s(vertex_count, edges, fn);
  s.recurse(0);
}

int count_cycles(std::size_t vertex_count,
                 const std::vector<std::pair<int, int>>& edges,
                 const std::vector<int>& subset) {
  std::vector<int> parent(vertex_count);
  for (std::size_t i = 0; i < vertex_count; ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  int cycles = 0;
  for (int e : subset) {
    int a = find(edges[e].first), b = find(edges[e].second);
    if (a == b)
      ++cycles;
    else
      parent[b] = a;
  }
  return cycles;
}

void enumerate_configs(const Domain& g,
                       const std::function<void(const LoopConfig&)>& fn,
                       int edge_cap) {
  if (g.empty()) {
    // The empty domain has exactly one (empty) configuration.
    LoopConfig empty;
    empty.domain = &g;
    fn(empty);
    return;
  }
  if (static_cast<int>(g.edge_count()) > edge_cap)
    throw CapError("domain has " + std::to_string(g.edge_count()) +
                   " edges, above the enumeration cap " +
                   std::to_string(edge_cap));
  LoopConfig cfg;
  cfg.domain = &g;
  enumerate_valid_edge_subsets(
      g.vertex_count(), g.edges(),
      [&](const std::vector<int>& active) {
        cfg.active = active;
        fn(cfg);
      },
      edge_cap);
}

std::uint64_t count_configs(const Domain& g, int edge_cap) {
  std::uint64_t count = 0;
  enumerate_configs(g, [&](const LoopConfig&) { ++count; }, edge_cap);
  return count;
}

int loop_length_at(const LoopConfig& k, int vertex_id) {
  return static_cast<int>(component_edge_ids(k, vertex_id).size());
}

std::vector<int> component_edge_ids(const LoopConfig& k, int vertex_id) {
  const Domain& g = *k.domain;
  std::vector<char> in(g.edge_count(), 0);
  for (int e : k.active) in[e] = 1;
  int start_edge = -1, next = -1;
  for (auto [e, j] : g.incidence()[vertex_id])
    if (in[e]) {
      start_edge = e;
      next = j;
      break;
    }
  if (start_edge < 0) return {};
  std::vector<int> out{start_edge};
  int prev = vertex_id, cur = next;
  while (cur != vertex_id) {
    for (auto [e, j] : g.incidence()[cur]) {
      if (in[e] && j != prev) {
        out.push_back(e);
        prev = cur;
        cur = j;
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Polygon> polygons_in(const Domain& g, int max_len, int edge_cap) {
  std::vector<Polygon> out;
  enumerate_configs(
      g,
      [&](const LoopConfig& k) {
        if (k.active.empty() ||
            static_cast<int>(k.active.size()) > max_len)
          return;
        if (loop_count(k) != 1) return;
        std::vector<Edge> edges;
        for (int e : k.active) edges.push_back(g.edge_vertices(e));
        out.push_back(Polygon::from_edges(g.lattice(), std::move(edges)));
      },
      edge_cap);
  std::sort(out.begin(), out.end());
  return out;
}

ExpMomentEstimate sup_exp_moment(const LatticeKind& lattice, int max_side,
                                 double delta, const ModelParams<double>& p,
                                 int edge_cap) {
  if (delta <= 0) throw UsageError("sup_exp_moment: delta must be positive");
  ExpMomentEstimate best;
  best.delta = delta;
  best.value = 1.0;
  best.family_spec = lattice.name() + " boxes with sides <= " +
                     std::to_string(max_side) + ", all marked vertices";
  const int d = lattice.dim();
  std::vector<int> sides(d, 1);
  while (true) {
    Vertex corner(d, 0);
    Domain g = box_domain(lattice, corner, sides);
    if (static_cast<int>(g.edge_count()) <= edge_cap) {
      for (const Vertex& x : g.vertices()) {
        double v = exp_moment(g, x, delta, p, edge_cap);
        if (v > best.value) best.value = v;
      }
    }
    int i = 0;
    for (; i < d; ++i) {
      if (++sides[i] <= max_side) break;
      sides[i] = 1;
    }
    if (i == d) break;
  }
  return best;
}

}  // namespace loopon
