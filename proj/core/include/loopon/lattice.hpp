#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace loopon {

using Coord = int;
using Vertex = std::vector<Coord>;
// Normalized: first < second lexicographically.
using Edge = std::pair<Vertex, Vertex>;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Edge make_edge(Vertex a, Vertex b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

// Z^d (d >= 2) or the hexagonal lattice in its brick-wall embedding on Z^2:
// (x,y) ~ (x+-1,y) always, and (x,y) ~ (x,y+1) iff x+y is even,
// (x,y) ~ (x,y-1) iff x+y is odd.
class LatticeKind {
 public:
  enum class Family { HyperCubic, Hexagonal };

  static LatticeKind hypercubic(int d) {
    if (d < 2) throw UsageError("hypercubic lattice requires d >= 2");
    return LatticeKind(Family::HyperCubic, d);
  }
  static LatticeKind hexagonal() { return LatticeKind(Family::Hexagonal, 2); }

  Family family() const { return family_; }
  int dim() const { return d_; }
  bool is_hex() const { return family_ == Family::Hexagonal; }
  int degree() const { return is_hex() ? 3 : 2 * d_; }

  std::string name() const {
    return is_hex() ? "hex" : "z" + std::to_string(d_);
  }

  // Accepts "hex" or "z<d>" with d >= 2.
  static LatticeKind parse(const std::string& s);

  bool operator==(const LatticeKind& o) const {
    return family_ == o.family_ && d_ == o.d_;
  }
  bool operator!=(const LatticeKind& o) const { return !(*this == o); }

 private:
  LatticeKind(Family f, int d) : family_(f), d_(d) {}
  Family family_;
  int d_;
};

// All lattice neighbors of v in a fixed deterministic order.
std::vector<Vertex> neighbors(const LatticeKind& lattice, const Vertex& v);

bool adjacent(const LatticeKind& lattice, const Vertex& a, const Vertex& b);

// A finite induced subgraph: the edge set is exactly the lattice edges with
// both endpoints inside the vertex set. Vertices are stored sorted; edges
// are stored as index pairs (i,j), i<j, sorted.
class Domain {
 public:
  Domain(LatticeKind lattice, std::vector<Vertex> vertices);

  // Distinguished empty domain; its partition function is 1.
  static Domain empty_domain(LatticeKind lattice);

  const LatticeKind& lattice() const { return lattice_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  // Per-vertex incident (edge id, neighbor vertex id), deterministic order.
  const std::vector<std::vector<std::pair<int, int>>>& incidence() const {
    return incidence_;
  }

  bool empty() const { return vertices_.empty(); }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  int vertex_index(const Vertex& v) const;  // -1 if absent
  bool contains(const Vertex& v) const { return vertex_index(v) >= 0; }
  Edge edge_vertices(int e) const {
    return make_edge(vertices_[edges_[e].first], vertices_[edges_[e].second]);
  }
  int edge_index(const Vertex& a, const Vertex& b) const;  // -1 if absent

  nlohmann::json to_json() const;
  static Domain from_json(const nlohmann::json& j);

 private:
  Domain(LatticeKind lattice) : lattice_(lattice) {}
  LatticeKind lattice_;
  std::vector<Vertex> vertices_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<std::pair<int, int>>> incidence_;
};

// Induced domain on the axis-aligned box with the given corner and side
// lengths (all >= 1).
Domain box_domain(const LatticeKind& lattice, const Vertex& corner,
                  const std::vector<int>& side_lengths);

Domain induced_domain(const LatticeKind& lattice,
                      std::vector<Vertex> vertex_set);

// Domain on vertices(G) \ S with induced edges. Removing every vertex yields
// the distinguished empty domain. Throws if S is not a subset of G.
Domain domain_minus(const Domain& g, const std::vector<Vertex>& removed);

}  // namespace loopon
