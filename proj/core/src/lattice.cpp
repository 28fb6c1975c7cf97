#include "loopon/lattice.hpp"

#include <algorithm>
#include <set>

namespace loopon {

LatticeKind LatticeKind::parse(const std::string& s) {
  if (s == "hex") return hexagonal();
  if (s.size() >= 2 && s[0] == 'z') {
    int d = 0;
    try {
      d = std::stoi(s.substr(1));
    } catch (const std::exception&) {
      throw UsageError("unknown lattice: " + s);
    }
    return hypercubic(d);
  }
  throw UsageError("unknown lattice: " + s);
}

namespace {

int parity(const Vertex& v) {
  long s = 0;
  for (Coord c : v) s += c;
  return static_cast<int>(((s % 2) + 2) % 2);
}

}  // namespace

std::vector<Vertex> neighbors(const LatticeKind& lattice, const Vertex& v) {
  const int d = lattice.dim();
  if (static_cast<int>(v.size()) != d)
    throw UsageError("vertex arity " + std::to_string(v.size()) +
                     " does not match lattice dimension " + std::to_string(d));
  std::vector<Vertex> out;
  if (lattice.is_hex()) {
    out.reserve(3);
    Vertex w = v;
    w[0] = v[0] + 1;
    out.push_back(w);
    w[0] = v[0] - 1;
    out.push_back(w);
    w[0] = v[0];
    w[1] = parity(v) == 0 ? v[1] + 1 : v[1] - 1;
    out.push_back(w);
  } else {
    out.reserve(2 * d);
    for (int i = 0; i < d; ++i) {
      Vertex w = v;
      w[i] = v[i] + 1;
      out.push_back(w);
      w[i] = v[i] - 1;
      out.push_back(w);
    }
  }
  return out;
}

bool adjacent(const LatticeKind& lattice, const Vertex& a, const Vertex& b) {
  if (a.size() != b.size()) return false;
  if (lattice.is_hex()) {
    if (a[1] == b[1]) return std::abs(a[0] - b[0]) == 1;
    if (a[0] != b[0]) return false;
    int dy = b[1] - a[1];
    if (std::abs(dy) != 1) return false;
    return parity(a) == 0 ? dy == 1 : dy == -1;
  }
  int diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff += std::abs(a[i] - b[i]);
    if (diff > 1) return false;
  }
  return diff == 1;
}

Domain::Domain(LatticeKind lattice, std::vector<Vertex> vertices)
    : lattice_(lattice) {
  if (vertices.empty()) throw UsageError("domain requires a nonempty vertex set");
  for (const Vertex& v : vertices)
    if (static_cast<int>(v.size()) != lattice_.dim())
      throw UsageError("vertex arity does not match lattice dimension");
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  vertices_ = std::move(vertices);
  incidence_.resize(vertices_.size());
  for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
    for (const Vertex& w : neighbors(lattice_, vertices_[i])) {
      int j = vertex_index(w);
      if (j > i) {
        int e = static_cast<int>(edges_.size());
        edges_.push_back({i, j});
        incidence_[i].push_back({e, j});
        incidence_[j].push_back({e, i});
      }
    }
  }
  // Edges were discovered in increasing (i, j) order except for the j-side
  // incidence lists; sort everything for a canonical layout.
  std::sort(edges_.begin(), edges_.end());
  for (auto& inc : incidence_)
    std::sort(inc.begin(), inc.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
  // Re-map edge ids after the sort.
  std::vector<std::vector<std::pair<int, int>>> inc(vertices_.size());
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    inc[edges_[e].first].push_back({e, edges_[e].second});
    inc[edges_[e].second].push_back({e, edges_[e].first});
  }
  incidence_ = std::move(inc);
}

Domain Domain::empty_domain(LatticeKind lattice) { return Domain(lattice); }

int Domain::vertex_index(const Vertex& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return -1;
  return static_cast<int>(it - vertices_.begin());
}

int Domain::edge_index(const Vertex& a, const Vertex& b) const {
  int i = vertex_index(a), j = vertex_index(b);
  if (i < 0 || j < 0) return -1;
  if (i > j) std::swap(i, j);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{i, j});
  if (it == edges_.end() || *it != std::pair{i, j}) return -1;
  return static_cast<int>(it - edges_.begin());
}

nlohmann::json Domain::to_json() const {
  nlohmann::json j;
  j["lattice"] = lattice_.name();
  j["d"] = lattice_.dim();
  j["vertices"] = vertices_;
  return j;
}

Domain Domain::from_json(const nlohmann::json& j) {
  LatticeKind lattice = LatticeKind::parse(j.at("lattice").get<std::string>());
  auto verts = j.at("vertices").get<std::vector<Vertex>>();
  if (verts.empty()) return empty_domain(lattice);
  return Domain(lattice, std::move(verts));
}

Domain box_domain(const LatticeKind& lattice, const Vertex& corner,
                  const std::vector<int>& side_lengths) {
  const int d = lattice.dim();
  if (static_cast<int>(corner.size()) != d ||
      static_cast<int>(side_lengths.size()) != d)
    throw UsageError("box corner/side arity does not match lattice dimension");
  for (int s : side_lengths)
    if (s < 1) throw UsageError("box side lengths must be >= 1");
  std::vector<Vertex> verts;
  Vertex v = corner;
  while (true) {
    verts.push_back(v);
    int i = 0;
    for (; i < d; ++i) {
      if (++v[i] < corner[i] + side_lengths[i]) break;
      v[i] = corner[i];
    }
    if (i == d) break;
  }
  return Domain(lattice, std::move(verts));
}

Domain induced_domain(const LatticeKind& lattice,
                      std::vector<Vertex> vertex_set) {
  return Domain(lattice, std::move(vertex_set));
}

Domain domain_minus(const Domain& g, const std::vector<Vertex>& removed) {
  std::set<Vertex> drop;
  for (const Vertex& v : removed) {
    if (!g.contains(v))
      throw UsageError("domain_minus: removed vertex not in domain");
    drop.insert(v);
  }
  std::vector<Vertex> keep;
  for (const Vertex& v : g.vertices())
    if (!drop.count(v)) keep.push_back(v);
  if (keep.empty()) return Domain::empty_domain(g.lattice());
  return Domain(g.lattice(), std::move(keep));
}

}  // namespace loopon
