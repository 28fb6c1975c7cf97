#include "loopon/saw.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace loopon {

std::vector<Vertex> Pattern::deltas() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i + 1 < walk.sites.size(); ++i) {
    Vertex d(walk.sites[i].size());
    for (std::size_t k = 0; k < d.size(); ++k)
      d[k] = walk.sites[i + 1][k] - walk.sites[i][k];
    out.push_back(std::move(d));
  }
  return out;
}

Pattern pattern_p_prime(const LatticeKind& lattice) {
  Pattern p;
  p.id = "pprime";
  const int d = lattice.dim();
  if (lattice.is_hex()) {
    // Five consecutive edges of the hexagonal face anchored at the origin.
    p.walk.sites = {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {1, 1}, {0, 1}};
  } else {
    Vertex o(d, 0), e1(d, 0), e2(d, 0), e12(d, 0);
    e1[0] = 1;
    e2[1] = 1;
    e12[0] = 1;
    e12[1] = 1;
    p.walk.sites = {o, e2, e12, e1};
  }
  return p;
}

std::vector<int> occurrences(const Walk& w, const Pattern& p) {
  std::vector<int> out;
  auto pd = p.deltas();
  const int psteps = static_cast<int>(pd.size());
  const int wsteps = w.length();
  if (psteps > wsteps) return out;
  for (int j = 0; j + psteps <= wsteps; ++j) {
    bool match = true;
    for (int k = 0; k < psteps && match; ++k)
      for (std::size_t c = 0; c < pd[k].size(); ++c)
        if (w.sites[j + k + 1][c] - w.sites[j + k][c] != pd[k][c]) {
          match = false;
          break;
        }
    if (match) out.push_back(j);
  }
  return out;
}

Walk orient(const Polygon& p, const Vertex& x) {
  if (p.is_degenerate()) throw UsageError("orient: degenerate polygon");
  if (!p.contains_vertex(x)) throw UsageError("orient: vertex not on polygon");
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const Edge& e : p.edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  auto trace = [&](const Vertex& second) {
    Walk w;
    w.sites.push_back(x);
    Vertex prev = x, cur = second;
    while (cur != x) {
      w.sites.push_back(cur);
      const auto& nbrs = adj[cur];
      Vertex next = (nbrs[0] == prev) ? nbrs[1] : nbrs[0];
      prev = cur;
      cur = next;
    }
    return w;
  };
  Walk a = trace(adj[x][0]);
  Walk b = trace(adj[x][1]);
  return a.sites < b.sites ? a : b;
}

namespace {

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Dense visited grid over [x - R, x + R]^d.
struct Grid {
  int d, r;
  Vertex origin;
  std::vector<long> stride;
  std::vector<char> visited;

  Grid(int d_, int r_, Vertex origin_)
      : d(d_), r(r_), origin(std::move(origin_)) {
    long span = 2L * r + 1;
    long cells = 1;
    stride.resize(d);
    for (int i = 0; i < d; ++i) {
      stride[i] = cells;
      cells *= span;
      if (cells > 200'000'000L)
        throw CapError("walk enumeration grid too large for this dimension");
    }
    visited.assign(cells, 0);
  }

  long index(const Vertex& v) const {
    long idx = 0;
    for (int i = 0; i < d; ++i) idx += stride[i] * (v[i] - origin[i] + r);
    return idx;
  }
};

// One step along direction k; for the hexagonal vertical direction the move
// is an involution, so applying it twice undoes it.
void apply_dir(const LatticeKind& lat, Vertex& v, int k) {
  if (lat.is_hex()) {
    if (k == 0)
      ++v[0];
    else if (k == 1)
      --v[0];
    else {
      long s = v[0] + v[1];
      v[1] += (((s % 2) + 2) % 2 == 0) ? 1 : -1;
    }
  } else {
    int axis = k / 2;
    v[axis] += (k % 2 == 0) ? 1 : -1;
  }
}

void undo_dir(const LatticeKind& lat, Vertex& v, int k) {
  if (lat.is_hex() && k == 2) {
    apply_dir(lat, v, 2);
  } else {
    apply_dir(lat, v, k ^ 1);
  }
}

long l1_dist(const Vertex& a, const Vertex& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::labs(a[i] - b[i]);
  return s;
}

struct SawSearch {
  const LatticeKind& lat;
  Grid grid;
  Walk walk;
  std::vector<Vertex> pat;  // pattern step deltas; empty disables tracking
  std::vector<char> occ_at;
  int occ = 0;
  // Polygon mode: require the final vertex adjacent to target.
  bool sap_mode = false;
  Vertex target;

  SawSearch(const LatticeKind& l, const Vertex& x, int n)
      : lat(l), grid(l.dim(), std::max(n, 1), x) {
    walk.sites.push_back(x);
    grid.visited[grid.index(x)] = 1;
  }

  bool delta_matches_tail() {
    const int t = walk.length();
    const int ps = static_cast<int>(pat.size());
    if (t < ps) return false;
    for (int k = 0; k < ps; ++k) {
      const Vertex& a = walk.sites[t - ps + k];
      const Vertex& b = walk.sites[t - ps + k + 1];
      for (std::size_t c = 0; c < a.size(); ++c)
        if (b[c] - a[c] != pat[k][c]) return false;
    }
    return true;
  }

  template <class Leaf>
  void dfs(int remaining, Leaf&& leaf) {
    if (remaining == 0) {
      leaf(walk, occ);
      return;
    }
    const Vertex cur = walk.sites.back();  // copy: push_back reallocates
    const int deg = lat.degree();
    for (int k = 0; k < deg; ++k) {
      Vertex next = cur;
      apply_dir(lat, next, k);
      long idx = grid.index(next);
      if (grid.visited[idx]) continue;
      if (sap_mode) {
        long dist = l1_dist(next, target);
        if (dist > remaining || ((remaining - dist) & 1)) continue;
      }
      grid.visited[idx] = 1;
      walk.sites.push_back(std::move(next));
      bool hit = !pat.empty() && delta_matches_tail();
      occ_at.push_back(hit ? 1 : 0);
      if (hit) ++occ;
      dfs(remaining - 1, leaf);
      if (occ_at.back()) --occ;
      occ_at.pop_back();
      walk.sites.pop_back();
      grid.visited[idx] = 0;
    }
  }
};

void check_walk_args(const LatticeKind& lat, const Vertex& x, int n, int cap) {
  if (static_cast<int>(x.size()) != lat.dim())
    throw UsageError("vertex arity does not match lattice dimension");
  if (n < 0) throw UsageError("walk length must be >= 0");
  if (n > cap)
    throw CapError("walk length " + std::to_string(n) +
                   " exceeds cap " + std::to_string(cap));
}

}  // namespace

std::uint64_t enumerate_saws(const LatticeKind& lattice, const Vertex& x,
                             int n, int cap) {
  check_walk_args(lattice, x, n, cap);
  if (n == 0) return 1;
  SawSearch s(lattice, x, n);
  std::uint64_t count = 0;
  s.dfs(n, [&](const Walk&, int) { ++count; });
  return count;
}

void for_each_saw(const LatticeKind& lattice, const Vertex& x, int n,
                  const std::function<void(const Walk&)>& fn, int cap) {
  check_walk_args(lattice, x, n, cap);
  SawSearch s(lattice, x, n);
  s.dfs(n, [&](const Walk& w, int) { fn(w); });
}

std::map<int, std::uint64_t> saw_occurrence_histogram(
    const LatticeKind& lattice, const Vertex& x, int n, const Pattern& p,
    int cap) {
  check_walk_args(lattice, x, n, cap);
  SawSearch s(lattice, x, n);
  s.pat = p.deltas();
  std::map<int, std::uint64_t> hist;
  s.dfs(n, [&](const Walk&, int occ) { ++hist[occ]; });
  return hist;
}

void for_each_sap_walk(const LatticeKind& lattice, const Vertex& x, int n,
                       const std::function<void(const Walk&)>& fn, int cap) {
  check_walk_args(lattice, x, n, cap);
  if (n <= 0) throw UsageError("polygon length must be >= 1");
  const int min_len = lattice.is_hex() ? 6 : 4;
  if (n < min_len || n % 2 != 0) return;  // SAP_x(N) empty for these N
  SawSearch s(lattice, x, n);
  s.sap_mode = true;
  s.target = x;
  s.dfs(n - 1, [&](const Walk& w, int) {
    if (!adjacent(lattice, w.sites.back(), w.sites.front())) return;
    // Each polygon is traced twice from x; keep one orientation.
    if (w.sites[1] < w.sites.back()) fn(w);
  });
}

std::vector<Polygon> enumerate_saps(const LatticeKind& lattice,
                                    const Vertex& x, int n, int cap) {
  if (n == 1) return {Polygon::degenerate(x)};
  std::vector<Polygon> out;
  for_each_sap_walk(
      lattice, x, n, [&](const Walk& w) { out.push_back(close_walk(lattice, w)); },
      cap);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t sap_count(const LatticeKind& lattice, const Vertex& x, int n,
                        int cap) {
  if (n == 1) return 1;
  std::uint64_t count = 0;
  for_each_sap_walk(lattice, x, n, [&](const Walk&) { ++count; }, cap);
  return count;
}

namespace {

// f(P) for a polygon delivered as a traversal from x: the lexicographically
// smaller of the walk and its reversal through x.
Walk canonical_orientation(const Walk& w) {
  Walk rev;
  rev.sites.push_back(w.sites.front());
  for (std::size_t i = w.sites.size() - 1; i >= 1; --i)
    rev.sites.push_back(w.sites[i]);
  return w.sites < rev.sites ? w : rev;
}

}  // namespace

std::map<int, std::uint64_t> sap_occurrence_histogram(
    const LatticeKind& lattice, const Vertex& x, int n, const Pattern& p,
    int cap) {
  std::map<int, std::uint64_t> hist;
  if (n == 1) return hist;
  for_each_sap_walk(
      lattice, x, n,
      [&](const Walk& w) {
        Walk f = canonical_orientation(w);
        ++hist[static_cast<int>(occurrences(f, p).size())];
      },
      cap);
  return hist;
}

std::uint64_t deficient_count(const LatticeKind& lattice, const Vertex& x,
                              int n, int w, const Pattern& p, WalkKind kind,
                              int cap) {
  if (w <= 0) return 0;
  auto hist = kind == WalkKind::Saw
                  ? saw_occurrence_histogram(lattice, x, n, p, cap)
                  : sap_occurrence_histogram(lattice, x, n, p, cap);
  std::uint64_t out = 0;
  for (const auto& [occ, cnt] : hist)
    if (occ < w) out += cnt;
  return out;
}

std::map<int, double> growth_estimates(
    const std::map<int, std::uint64_t>& counts) {
  if (counts.empty()) throw UsageError("growth_estimates: no counts");
  std::map<int, double> out;
  for (const auto& [n, c] : counts) {
    if (c == 0) throw UsageError("growth_estimates: zero count");
    out[n] = std::pow(static_cast<double>(c), 1.0 / n);
  }
  return out;
}

std::vector<Polygon> q_squares(const LatticeKind& lattice, const Walk& oriented,
                               const std::vector<int>& occ) {
  const Pattern p = pattern_p_prime(lattice);
  const int ps = p.walk.length();
  std::vector<Polygon> out;
  for (int j : occ) {
    if (j < 0 || j + ps > oriented.length())
      throw UsageError("q_squares: occurrence index out of range");
    // Verify the occurrence before closing it into a face.
    for (int k = 0; k <= ps; ++k)
      for (std::size_t c = 0; c < oriented.sites[j].size(); ++c)
        if (oriented.sites[j + k][c] - oriented.sites[j][c] !=
            p.walk.sites[k][c] - p.walk.sites[0][c])
          throw UsageError("q_squares: not a pattern occurrence");
    std::vector<Edge> edges;
    for (int k = 0; k < ps; ++k)
      edges.push_back(make_edge(oriented.sites[j + k], oriented.sites[j + k + 1]));
    edges.push_back(make_edge(oriented.sites[j], oriented.sites[j + ps]));
    out.push_back(Polygon::from_edges(lattice, std::move(edges)));
  }
  return out;
}

SupermultReport check_supermultiplicativity(
    const LatticeKind& lattice, const std::map<int, std::uint64_t>& saw_counts,
    const std::map<int, std::uint64_t>& sap_counts) {
  SupermultReport rep;
  for (const auto& [m, cm] : saw_counts)
    for (const auto& [n, cn] : saw_counts) {
      auto it = saw_counts.find(m + n);
      if (it == saw_counts.end()) continue;
      if (static_cast<long double>(it->second) >
          static_cast<long double>(cm) * static_cast<long double>(cn)) {
        rep.saw_submultiplicative = false;
        rep.violations.push_back("saw submultiplicativity fails at m=" +
                                 std::to_string(m) + " n=" + std::to_string(n));
      }
    }
  const int d = lattice.dim();
  const double big_m = lattice.degree() - 1;  // upper bound on mu
  for (const auto& [n, c] : sap_counts) {
    if (n < 3) continue;  // degenerate entry
    double bound = (static_cast<double>(d - 1) / d) * n * std::pow(big_m, n);
    if (static_cast<double>(c) > bound) {
      rep.sap_bound_ok = false;
      rep.violations.push_back("sap count bound fails at N=" +
                               std::to_string(n));
    }
  }
  return rep;
}

}  // namespace loopon
