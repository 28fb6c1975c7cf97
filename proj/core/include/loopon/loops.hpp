#pragma once

#include <vector>

#include "loopon/lattice.hpp"
#include "loopon/walk.hpp"

namespace loopon {

// A loop configuration: a subset of the domain's edges in which every vertex
// has degree 0 or 2. Stored as sorted edge ids into the domain's edge list.
struct LoopConfig {
  const Domain* domain = nullptr;
  std::vector<int> active;  // sorted edge ids

  bool operator==(const LoopConfig& o) const { return active == o.active; }
};

template <class T>
struct ModelParams {
  T lambda{};
  T n{};
};

// x^e with the 0^0 = 1 convention; e >= 0.
template <class T>
T pow_weight(const T& x, long e) {
  if (e == 0) return T(1);
  T out(1);
  T b = x;
  while (e > 0) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

bool is_valid_config(const Domain& g, const std::vector<int>& edge_ids);

// Number of loops (connected components with at least one edge).
int loop_count(const LoopConfig& k);

inline int edge_count(const LoopConfig& k) {
  return static_cast<int>(k.active.size());
}

template <class T>
T config_weight(const LoopConfig& k, const ModelParams<T>& p) {
  if (p.lambda < T(0) || p.n < T(0))
    throw UsageError("model parameters must be nonnegative");
  return pow_weight(p.lambda, edge_count(k)) * pow_weight(p.n, loop_count(k));
}

// The loop through x, or the degenerate polygon at x if x is isolated.
Polygon component_at(const LoopConfig& k, const Vertex& x);

// Induced graph on the polygon's vertex set inside G. Contains P; may have
// extra chord edges.
Domain envelope(const Domain& g, const Polygon& p);

nlohmann::json config_to_json(const LoopConfig& k);

}  // namespace loopon
