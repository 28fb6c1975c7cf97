#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "loopon/loops.hpp"
#include "loopon/rng.hpp"

namespace loopon {

// A minimal lattice face whose edges all lie in the domain: a unit square on
// Z^d (any axis pair), a hexagon on the hexagonal lattice.
struct Face {
  std::vector<int> edge_ids;
  std::vector<int> vertex_ids;
};

std::vector<Face> list_faces(const Domain& g);

// Metropolis face-flip chain targeting the loop O(n) weights. Single-threaded
// by contract; run several chains with distinct seeds for independence.
class Chain {
 public:
  Chain(const Domain& g, ModelParams<double> params, std::uint64_t seed,
        bool full_recompute = false);

  void step();
  void sweep() {
    for (std::size_t i = 0; i < faces_.size(); ++i) step();
  }

  const Domain& domain() const { return *domain_; }
  const std::vector<Face>& faces() const { return faces_; }
  LoopConfig config() const;
  int edge_total() const { return o_; }
  int loop_total() const { return loops_; }
  std::uint64_t steps_taken() const { return steps_; }
  double acceptance_rate() const {
    return steps_ ? static_cast<double>(accepted_) / steps_ : 0.0;
  }

 private:
  bool flip_valid(const Face& f) const;
  int local_loop_count(const Face& f) const;

  const Domain* domain_;
  ModelParams<double> params_;
  std::vector<Face> faces_;
  std::vector<char> active_;
  std::vector<int> degree_;
  int o_ = 0;
  int loops_ = 0;
  std::uint64_t steps_ = 0;
  std::uint64_t accepted_ = 0;
  bool full_recompute_;
  Xoshiro256ss rng_;
};

struct McReport {
  std::uint64_t seed = 0;
  std::uint64_t sweeps = 0;
  std::uint64_t burn_in = 0;
  double lambda = 0;
  double n = 0;
  std::string rng_name;
  bool ergodicity_heuristic = false;  // true on Z^d, where flips may not mix
  double acceptance_rate = 0;
  double mean_edges = 0;
  double mean_loops = 0;
  std::uint64_t samples = 0;
  // marked vertex -> (loop length -> sample count)
  std::map<std::size_t, std::map<int, std::uint64_t>> length_histograms;

  nlohmann::json to_json(const Domain& g) const;
};

// Runs the chain for burn_in + sweeps sweeps, sampling observables once per
// sweep after burn-in. marked are vertex indices into the domain.
McReport run_mc(const Domain& g, const ModelParams<double>& params,
                std::uint64_t sweeps, std::uint64_t burn_in,
                std::uint64_t seed, const std::vector<std::size_t>& marked,
                bool full_recompute = false);

}  // namespace loopon
