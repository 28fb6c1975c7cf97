#pragma once

#include <vector>

#include "loopon/lattice.hpp"

namespace loopon {

// A self-avoiding walk as its site sequence; length = number of steps.
struct Walk {
  std::vector<Vertex> sites;

  int length() const { return static_cast<int>(sites.size()) - 1; }
  bool operator==(const Walk&) const = default;
};

bool is_self_avoiding_walk(const LatticeKind& lattice, const Walk& w);

// A self-avoiding polygon: a single cycle stored as a sorted canonical edge
// set, or the degenerate single-vertex polygon (no edges, length 0).
struct Polygon {
  std::vector<Edge> edges;  // sorted; empty iff degenerate
  Vertex base;              // the anchor vertex when degenerate

  static Polygon degenerate(Vertex x) { return Polygon{{}, std::move(x)}; }
  // Validates that the edges form a single cycle of the lattice.
  static Polygon from_edges(const LatticeKind& lattice,
                            std::vector<Edge> edges);

  bool is_degenerate() const { return edges.empty(); }
  int length() const { return static_cast<int>(edges.size()); }

  std::vector<Vertex> vertex_set() const;
  bool contains_vertex(const Vertex& v) const;

  bool operator==(const Polygon&) const = default;
  bool operator<(const Polygon& o) const {
    if (edges != o.edges) return edges < o.edges;
    return base < o.base;
  }
};

// Closes an open walk whose endpoints are lattice-adjacent into a polygon.
Polygon close_walk(const LatticeKind& lattice, const Walk& w);

}  // namespace loopon
