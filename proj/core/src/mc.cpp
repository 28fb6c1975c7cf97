#include "loopon/mc.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace loopon {

std::vector<Face> list_faces(const Domain& g) {
  std::vector<Face> out;
  const LatticeKind& lat = g.lattice();
  auto add_face = [&](const std::vector<Vertex>& cycle) {
    Face f;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int vi = g.vertex_index(cycle[i]);
      if (vi < 0) return;
      f.vertex_ids.push_back(vi);
      int e = g.edge_index(cycle[i], cycle[(i + 1) % cycle.size()]);
      if (e < 0) return;
      f.edge_ids.push_back(e);
    }
    out.push_back(std::move(f));
  };
  if (lat.is_hex()) {
    for (const Vertex& v : g.vertices()) {
      if ((((v[0] + v[1]) % 2) + 2) % 2 != 0) continue;
      Coord x = v[0], y = v[1];
      add_face({{x, y}, {x + 1, y}, {x + 2, y}, {x + 2, y + 1},
                {x + 1, y + 1}, {x, y + 1}});
    }
  } else {
    const int d = lat.dim();
    for (const Vertex& v : g.vertices()) {
      for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
          Vertex a = v, b = v, c = v;
          a[i] += 1;
          b[i] += 1;
          b[j] += 1;
          c[j] += 1;
          add_face({v, a, b, c});
        }
      }
    }
  }
  return out;
}

Chain::Chain(const Domain& g, ModelParams<double> params, std::uint64_t seed,
             bool full_recompute)
    : domain_(&g),
      params_(params),
      faces_(list_faces(g)),
      active_(g.edge_count(), 0),
      degree_(g.vertex_count(), 0),
      full_recompute_(full_recompute),
      rng_(seed) {
  if (params.lambda < 0 || params.n < 0)
    throw UsageError("model parameters must be nonnegative");
  if (faces_.empty()) throw UsageError("domain has no complete faces");
}

bool Chain::flip_valid(const Face& f) const {
  // Each face vertex carries exactly two face edges; flipping toggles both.
  for (std::size_t i = 0; i < f.vertex_ids.size(); ++i) {
    int v = f.vertex_ids[i];
    int e1 = f.edge_ids[i];
    int e0 = f.edge_ids[(i + f.edge_ids.size() - 1) % f.edge_ids.size()];
    int on = active_[e0] + active_[e1];
    int nd = degree_[v] - on + (2 - on);
    if (nd != 0 && nd != 2) return false;
  }
  return true;
}

int Chain::local_loop_count(const Face& f) const {
  const Domain& g = *domain_;
  std::vector<int> visited;
  int loops = 0;
  for (int start : f.vertex_ids) {
    if (degree_[start] == 0) continue;
    if (std::find(visited.begin(), visited.end(), start) != visited.end())
      continue;
    ++loops;
    visited.push_back(start);
    int prev = start, cur = -1;
    for (auto [e, j] : g.incidence()[start])
      if (active_[e]) {
        cur = j;
        break;
      }
    while (cur != start) {
      visited.push_back(cur);
      for (auto [e, j] : g.incidence()[cur]) {
        if (active_[e] && j != prev) {
          prev = cur;
          cur = j;
          break;
        }
      }
    }
  }
  return loops;
}

void Chain::step() {
  ++steps_;
  const Face& f = faces_[rng_.below(faces_.size())];
  if (!flip_valid(f)) return;
  const int before = local_loop_count(f);
  int delta_o = 0;
  for (int e : f.edge_ids) delta_o += active_[e] ? -1 : 1;
  // Apply the flip, then decide.
  auto apply = [&](int sign) {
    for (std::size_t i = 0; i < f.edge_ids.size(); ++i) {
      int e = f.edge_ids[i];
      int dv = active_[e] ? -1 : 1;
      active_[e] ^= 1;
      auto [a, b] = domain_->edges()[e];
      degree_[a] += dv;
      degree_[b] += dv;
    }
    (void)sign;
  };
  apply(+1);
  const int after = local_loop_count(f);
  const int delta_l = after - before;
  double ratio = std::pow(params_.lambda, delta_o);
  if (delta_l != 0) ratio *= std::pow(params_.n, delta_l);
  if (rng_.uniform() < ratio) {
    ++accepted_;
    o_ += delta_o;
    loops_ += delta_l;
    if (full_recompute_) loops_ = loop_count(config());
    assert(is_valid_config(*domain_, config().active));
  } else {
    apply(-1);
  }
}

LoopConfig Chain::config() const {
  LoopConfig k;
  k.domain = domain_;
  for (int e = 0; e < static_cast<int>(active_.size()); ++e)
    if (active_[e]) k.active.push_back(e);
  return k;
}

nlohmann::json McReport::to_json(const Domain& g) const {
  nlohmann::json j;
  j["domain"] = g.to_json();
  j["params"] = {{"lambda", lambda}, {"n", n}};
  j["seed"] = seed;
  j["rng"] = rng_name;
  j["sweeps"] = sweeps;
  j["burn_in"] = burn_in;
  j["ergodicity_heuristic"] = ergodicity_heuristic;
  j["acceptance_rate"] = acceptance_rate;
  j["mean_edges"] = mean_edges;
  j["mean_loops"] = mean_loops;
  j["samples"] = samples;
  nlohmann::json hists = nlohmann::json::object();
  for (const auto& [vi, hist] : length_histograms) {
    nlohmann::json h = nlohmann::json::array();
    for (const auto& [len, cnt] : hist) h.push_back({len, cnt});
    nlohmann::json key = g.vertices()[vi];
    hists[key.dump()] = h;
  }
  j["length_histograms"] = hists;
  return j;
}

McReport run_mc(const Domain& g, const ModelParams<double>& params,
                std::uint64_t sweeps, std::uint64_t burn_in,
                std::uint64_t seed, const std::vector<std::size_t>& marked,
                bool full_recompute) {
  if (sweeps < 1) throw UsageError("run_mc: sweeps must be >= 1");
  Chain chain(g, params, seed, full_recompute);
  for (std::uint64_t s = 0; s < burn_in; ++s) chain.sweep();
  McReport rep;
  rep.seed = seed;
  rep.sweeps = sweeps;
  rep.burn_in = burn_in;
  rep.lambda = params.lambda;
  rep.n = params.n;
  rep.rng_name = Xoshiro256ss::kName;
  rep.ergodicity_heuristic = !g.lattice().is_hex();
  double sum_o = 0, sum_l = 0;
  for (std::uint64_t s = 0; s < sweeps; ++s) {
    chain.sweep();
    sum_o += chain.edge_total();
    sum_l += chain.loop_total();
    LoopConfig k = chain.config();
    for (std::size_t vi : marked) {
      // Trace the loop length at the marked vertex.
      int len = 0;
      const auto& inc = g.incidence()[vi];
      std::vector<char> in(g.edge_count(), 0);
      for (int e : k.active) in[e] = 1;
      int first = -1, nxt = -1;
      for (auto [e, j] : inc)
        if (in[e]) {
          first = e;
          nxt = j;
          break;
        }
      if (first >= 0) {
        len = 1;
        int prev = static_cast<int>(vi), cur = nxt;
        while (cur != static_cast<int>(vi)) {
          for (auto [e, j] : g.incidence()[cur]) {
            if (in[e] && j != prev) {
              ++len;
              prev = cur;
              cur = j;
              break;
            }
          }
        }
      }
      ++rep.length_histograms[vi][len];
    }
    ++rep.samples;
  }
  rep.acceptance_rate = chain.acceptance_rate();
  rep.mean_edges = sum_o / sweeps;
  rep.mean_loops = sum_l / sweeps;
  return rep;
}

}  // namespace loopon
