#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "loopon/loops.hpp"
#include "loopon/saw.hpp"

namespace loopon {

inline constexpr int kDefaultEdgeCap = 40;

// Visits every valid loop configuration of G exactly once, in a fixed
// deterministic order (DFS over edges with degree pruning).
void enumerate_configs(const Domain& g,
                       const std::function<void(const LoopConfig&)>& fn,
                       int edge_cap = kDefaultEdgeCap);

std::uint64_t count_configs(const Domain& g, int edge_cap = kDefaultEdgeCap);

// Visits every subset of the given edge list in which each endpoint ends at
// degree 0 or 2. Vertices are 0..vertex_count-1; subsets arrive as sorted
// edge-index lists.
void enumerate_valid_edge_subsets(
    std::size_t vertex_count, const std::vector<std::pair<int, int>>& edges,
    const std::function<void(const std::vector<int>&)>& fn,
    int edge_cap = kDefaultEdgeCap);

int count_cycles(std::size_t vertex_count,
                 const std::vector<std::pair<int, int>>& edges,
                 const std::vector<int>& subset);

// Partition function of an explicit, not necessarily induced, subgraph: the
// given lattice edges on their own endpoints. Used for union graphs such as
// the Q-face unions, whose induced closure would gain extra edges.
template <class T>
T partition_function_edges(const std::vector<Edge>& edges,
                           const ModelParams<T>& p,
                           int edge_cap = kDefaultEdgeCap) {
  if (p.lambda < T(0) || p.n < T(0))
    throw UsageError("model parameters must be nonnegative");
  std::map<Vertex, int> ids;
  std::vector<std::pair<int, int>> idx_edges;
  for (const Edge& e : edges) {
    int a = static_cast<int>(ids.emplace(e.first, ids.size()).first->second);
    int b = static_cast<int>(ids.emplace(e.second, ids.size()).first->second);
    idx_edges.push_back({a, b});
  }
  T z(0);
  enumerate_valid_edge_subsets(
      ids.size(), idx_edges,
      [&](const std::vector<int>& subset) {
        z += pow_weight(p.lambda, static_cast<long>(subset.size())) *
             pow_weight(p.n, count_cycles(ids.size(), idx_edges, subset));
      },
      edge_cap);
  return z;
}

// Loop length at x for a configuration, without materializing the polygon.
int loop_length_at(const LoopConfig& k, int vertex_id);

// Edge ids of the loop through vertex_id (empty when isolated), sorted.
std::vector<int> component_edge_ids(const LoopConfig& k, int vertex_id);

// All single-loop configurations of G, as polygons, up to max_len edges.
std::vector<Polygon> polygons_in(const Domain& g, int max_len,
                                 int edge_cap = kDefaultEdgeCap);

template <class T>
T partition_function(const Domain& g, const ModelParams<T>& p,
                     int edge_cap = kDefaultEdgeCap) {
  if (p.lambda < T(0) || p.n < T(0))
    throw UsageError("model parameters must be nonnegative");
  if (g.empty()) return T(1);
  T z(0);
  enumerate_configs(
      g, [&](const LoopConfig& k) { z += config_weight(k, p); }, edge_cap);
  return z;
}

template <class T>
struct EnumerationResult {
  T z{};
  std::uint64_t config_count = 0;
  std::map<int, T> length_law;  // loop length at the marked vertex -> prob
};

template <class T>
EnumerationResult<T> loop_length_distribution(const Domain& g, const Vertex& x,
                                              const ModelParams<T>& p,
                                              int edge_cap = kDefaultEdgeCap) {
  int xi = g.vertex_index(x);
  if (xi < 0) throw UsageError("marked vertex not in domain");
  EnumerationResult<T> res;
  std::map<int, T> mass;
  enumerate_configs(
      g,
      [&](const LoopConfig& k) {
        T w = config_weight(k, p);
        res.z += w;
        mass[loop_length_at(k, xi)] += w;
        ++res.config_count;
      },
      edge_cap);
  for (auto& [len, m] : mass) res.length_law[len] = m / res.z;
  return res;
}

// (direct, formula) for P(component at x equals P): direct sums enumerated
// configurations; formula is n * lambda^|P| * Z(G \ P) / Z(G).
template <class T>
std::pair<T, T> prob_component_equals(const Domain& g, const Vertex& x,
                                      const Polygon& poly,
                                      const ModelParams<T>& p,
                                      int edge_cap = kDefaultEdgeCap) {
  if (poly.is_degenerate() || !poly.contains_vertex(x))
    throw UsageError("prob_component_equals: need a polygon through x");
  int xi = g.vertex_index(x);
  if (xi < 0) throw UsageError("marked vertex not in domain");
  std::vector<int> target;
  for (const Edge& e : poly.edges) {
    int id = g.edge_index(e.first, e.second);
    if (id < 0) throw UsageError("polygon not inside domain");
    target.push_back(id);
  }
  std::sort(target.begin(), target.end());
  T z(0), hit(0);
  enumerate_configs(
      g,
      [&](const LoopConfig& k) {
        T w = config_weight(k, p);
        z += w;
        if (component_edge_ids(k, xi) == target) hit += w;
      },
      edge_cap);
  T zminus = partition_function(domain_minus(g, poly.vertex_set()), p, edge_cap);
  T formula = p.n * pow_weight(p.lambda, poly.length()) * zminus / z;
  return {hit / z, formula};
}

template <class T>
double exp_moment(const Domain& g, const Vertex& x, double delta,
                  const ModelParams<T>& p, int edge_cap = kDefaultEdgeCap) {
  if (delta <= 0) throw UsageError("exp_moment: delta must be positive");
  auto res = loop_length_distribution(g, x, p, edge_cap);
  double out = 0;
  for (const auto& [len, prob] : res.length_law)
    out += static_cast<double>(prob) * std::exp(delta * len);
  return out;
}

struct ExpMomentEstimate {
  double delta = 0;
  double value = 1;
  std::string family_spec;
};

// Max of exp_moment over all boxes with sides up to max_side (edge count
// within cap) and all marked vertices: a desk-scale lower estimate of the
// paper-style supremum over all finite domains.
ExpMomentEstimate sup_exp_moment(const LatticeKind& lattice, int max_side,
                                 double delta, const ModelParams<double>& p,
                                 int edge_cap = kDefaultEdgeCap);

// (Z(G), Z(G \ P) * Z(envelope(P))); the first is always >= the second.
template <class T>
std::pair<T, T> verify_factorization(const Domain& g, const Polygon& poly,
                                     const ModelParams<T>& p,
                                     int edge_cap = kDefaultEdgeCap) {
  T lhs = partition_function(g, p, edge_cap);
  T z_minus = partition_function(domain_minus(g, poly.vertex_set()), p, edge_cap);
  T z_env = partition_function(envelope(g, poly), p, edge_cap);
  return {lhs, z_minus * z_env};
}

template <class T>
struct Lemma1Result {
  T ratio{};       // Z(G \ P) / Z(G)
  T bound{};       // (1 + lambda^4 n)^{-ceil(aN)}
  T tight_bound{}; // (1 + lambda^4 n)^{-m}, one factor per occurrence
  int occurrence_count = 0;
  bool holds = false;
  bool holds_tight = false;
};

// Checks the partition-ratio bound for a polygon through x whose canonical
// orientation presents the pattern P' at m >= ceil(aN) steps.
template <class T>
Lemma1Result<T> verify_lemma1(const Domain& g, const Vertex& x,
                              const Polygon& poly, const ModelParams<T>& p,
                              double a, int edge_cap = kDefaultEdgeCap) {
  if (poly.is_degenerate() || !poly.contains_vertex(x))
    throw UsageError("verify_lemma1: need a polygon through x");
  if (a <= 0 || a >= 1) throw UsageError("verify_lemma1: a must be in (0,1)");
  Walk f = orient(poly, x);
  auto occ = occurrences(f, pattern_p_prime(g.lattice()));
  const int n_steps = poly.length();
  const int need = static_cast<int>(std::ceil(a * n_steps));
  Lemma1Result<T> res;
  res.occurrence_count = static_cast<int>(occ.size());
  if (res.occurrence_count < std::max(need, 1))
    throw UsageError("verify_lemma1: too few pattern occurrences");
  const int face_len = g.lattice().is_hex() ? 6 : 4;
  T factor = T(1) + pow_weight(p.lambda, face_len) * p.n;
  T z = partition_function(g, p, edge_cap);
  T z_minus = partition_function(domain_minus(g, poly.vertex_set()), p, edge_cap);
  res.ratio = z_minus / z;
  res.bound = T(1) / pow_weight(factor, std::max(need, 1));
  res.tight_bound = T(1) / pow_weight(factor, res.occurrence_count);
  res.holds = res.ratio <= res.bound;
  res.holds_tight = res.ratio <= res.tight_bound;
  return res;
}

}  // namespace loopon
