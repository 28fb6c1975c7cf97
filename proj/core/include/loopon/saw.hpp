#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "loopon/lattice.hpp"
#include "loopon/walk.hpp"

namespace loopon {

inline constexpr int kDefaultSawCap = 20;

// A pattern: a short walk anchored at the origin. Occurrence semantics are
// translation-only, applied by matching step sequences.
struct Pattern {
  Walk walk;
  std::string id;

  std::vector<Vertex> deltas() const;
};

// The U-shaped pattern (o, e2, e1+e2, e1) on Z^d; on the hexagonal lattice,
// five consecutive edges of a single hexagonal face.
Pattern pattern_p_prime(const LatticeKind& lattice);

// All step indices j at which p occurs in w (translation only).
std::vector<int> occurrences(const Walk& w, const Pattern& p);

// The orientation bijection: of the two walks tracing P from x, the one with
// the lexicographically smaller site sequence.
Walk orient(const Polygon& p, const Vertex& x);

// Exact count of N-step self-avoiding walks from x.
std::uint64_t enumerate_saws(const LatticeKind& lattice, const Vertex& x,
                             int n, int cap = kDefaultSawCap);

// Visits every N-step self-avoiding walk from x. Deterministic order.
void for_each_saw(const LatticeKind& lattice, const Vertex& x, int n,
                  const std::function<void(const Walk&)>& fn,
                  int cap = kDefaultSawCap);

// Histogram: number of pattern occurrences -> number of N-step SAWs from x.
std::map<int, std::uint64_t> saw_occurrence_histogram(
    const LatticeKind& lattice, const Vertex& x, int n, const Pattern& p,
    int cap = kDefaultSawCap);

// Visits each N-step self-avoiding polygon through x exactly once, as a walk
// of N sites starting at x whose endpoints are adjacent.
void for_each_sap_walk(const LatticeKind& lattice, const Vertex& x, int n,
                       const std::function<void(const Walk&)>& fn,
                       int cap = kDefaultSawCap);

// All N-step self-avoiding polygons through x; N = 1 yields the degenerate
// polygon. Each unoriented polygon appears exactly once.
std::vector<Polygon> enumerate_saps(const LatticeKind& lattice,
                                    const Vertex& x, int n,
                                    int cap = kDefaultSawCap);

std::uint64_t sap_count(const LatticeKind& lattice, const Vertex& x, int n,
                        int cap = kDefaultSawCap);

std::map<int, std::uint64_t> sap_occurrence_histogram(
    const LatticeKind& lattice, const Vertex& x, int n, const Pattern& p,
    int cap = kDefaultSawCap);

enum class WalkKind { Saw, Sap };

// Count of N-step objects presenting p at fewer than w steps. For polygons,
// occurrences are counted along the canonical orientation.
std::uint64_t deficient_count(const LatticeKind& lattice, const Vertex& x,
                              int n, int w, const Pattern& p, WalkKind kind,
                              int cap = kDefaultSawCap);

// Finite-N growth-rate estimates count^{1/N}.
std::map<int, double> growth_estimates(
    const std::map<int, std::uint64_t>& counts);

// The minimal face cycle closing each pattern occurrence along an oriented
// polygon traversal: unit squares on Z^d, hexagons on the hexagonal lattice.
std::vector<Polygon> q_squares(const LatticeKind& lattice,
                               const Walk& oriented,
                               const std::vector<int>& occ);

struct SupermultReport {
  bool saw_submultiplicative = true;   // c_{m+n} <= c_m c_n
  bool sap_bound_ok = true;            // |SAP(N)| <= ((d-1)/d) N M^N, M=2d-1
  std::vector<std::string> violations;
};

SupermultReport check_supermultiplicativity(
    const LatticeKind& lattice, const std::map<int, std::uint64_t>& saw_counts,
    const std::map<int, std::uint64_t>& sap_counts);

}  // namespace loopon
