// loopon: exact loop-model enumeration, walk/polygon counting, threshold
// curves, and a seeded Monte Carlo sampler, from one command-line surface.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "loopon/bounds.hpp"
#include "loopon/enumerate.hpp"
#include "loopon/mc.hpp"
#include "loopon/rational.hpp"
#include "loopon/saw.hpp"

using namespace loopon;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

std::vector<int> parse_box(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, 'x')) {
    int v = std::stoi(part);
    if (v < 1) throw UsageError("box sides must be >= 1");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty box spec");
  return out;
}

Vertex parse_vertex(const std::string& s) {
  Vertex v;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) v.push_back(std::stoi(part));
  if (v.empty()) throw UsageError("empty vertex spec");
  return v;
}

std::vector<Vertex> parse_vertex_list(const std::string& s) {
  std::vector<Vertex> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ';')) out.push_back(parse_vertex(part));
  return out;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file " + path);
  f << content;
}

// The result file stays byte-deterministic; the manifest (which carries the
// wall clock) goes next to it, or to stderr when the result goes to stdout.
void emit_manifest(const std::string& out_path, json manifest,
                   std::chrono::steady_clock::time_point t0) {
  manifest["tool_version"] = kVersion;
  manifest["wall_clock_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (out_path.empty())
    std::cerr << manifest.dump() << '\n';
  else
    write_output(out_path + ".manifest.json", manifest.dump(2) + "\n");
}

struct DomainSpec {
  std::string lattice = "z2";
  std::string box;
  std::string corner;
  std::string remove;

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--lattice", lattice, "Lattice: z<d> (d>=2) or hex");
    cmd->add_option("--box", box, "Box side lengths, e.g. 4x4")->required();
    cmd->add_option("--corner", corner, "Box corner vertex (default origin)");
    cmd->add_option("--remove", remove,
                    "Vertices to delete, e.g. \"1,1;2,2\"");
  }

  Domain build() const {
    LatticeKind lat = LatticeKind::parse(lattice);
    std::vector<int> sides = parse_box(box);
    if (static_cast<int>(sides.size()) != lat.dim())
      throw UsageError("box dimension does not match the lattice");
    Vertex c = corner.empty() ? Vertex(lat.dim(), 0) : parse_vertex(corner);
    Domain g = box_domain(lat, c, sides);
    auto removed = parse_vertex_list(remove);
    return removed.empty() ? g : domain_minus(g, removed);
  }
};

// ---------------------------------------------------------------------------

int cmd_z(const DomainSpec& spec, const std::string& lambda_s,
          const std::string& n_s, std::string mode, const std::string& mark,
          int edge_cap, const std::string& out) {
  auto t0 = std::chrono::steady_clock::now();
  Domain g = spec.build();
  if (mode.empty())
    mode = (lambda_s.find('/') != std::string::npos ||
            n_s.find('/') != std::string::npos)
               ? "rational"
               : "float";
  json result;
  result["mode"] = mode;
  result["params"] = {{"lambda", lambda_s}, {"n", n_s}};
  if (mode == "rational") {
    ModelParams<Rational> p{parse_rational(lambda_s), parse_rational(n_s)};
    if (mark.empty()) {
      result["Z"] = rational_to_string(partition_function(g, p, edge_cap));
    } else {
      auto res = loop_length_distribution(g, parse_vertex(mark), p, edge_cap);
      result["Z"] = rational_to_string(res.z);
      json law = json::array();
      for (auto& [len, prob] : res.length_law)
        law.push_back({len, rational_to_string(prob)});
      result["length_law"] = law;
    }
  } else if (mode == "float") {
    ModelParams<double> p{std::stod(lambda_s), std::stod(n_s)};
    if (mark.empty()) {
      result["Z"] = partition_function(g, p, edge_cap);
    } else {
      auto res = loop_length_distribution(g, parse_vertex(mark), p, edge_cap);
      result["Z"] = res.z;
      json law = json::array();
      for (auto& [len, prob] : res.length_law) law.push_back({len, prob});
      result["length_law"] = law;
    }
  } else {
    throw UsageError("mode must be float or rational");
  }
  write_output(out, result.dump(2) + "\n");
  json manifest{{"command", "z"},
                {"params",
                 {{"lattice", spec.lattice},
                  {"box", spec.box},
                  {"corner", spec.corner},
                  {"remove", spec.remove},
                  {"lambda", lambda_s},
                  {"n", n_s},
                  {"mode", mode},
                  {"x", mark},
                  {"edge_cap", edge_cap}}}};
  emit_manifest(out, manifest, t0);
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_verify(const DomainSpec& spec, const std::string& suite,
               const std::string& lambda_s, const std::string& n_s,
               int max_len, int edge_cap, const std::string& out) {
  auto t0 = std::chrono::steady_clock::now();
  ModelParams<Rational> p{parse_rational(lambda_s), parse_rational(n_s)};
  json report{{"suite", suite},
              {"params", {{"lambda", lambda_s}, {"n", n_s}}},
              {"checked", 0},
              {"failures", 0}};
  std::uint64_t checked = 0, failures = 0;
  auto fail = [&](json counterexample) {
    if (failures == 0) report["counterexample"] = std::move(counterexample);
    ++failures;
  };

  if (suite == "bound-partition") {
    // k = 1..4 pairwise vertex-disjoint unit squares, as a union graph.
    LatticeKind lat = LatticeKind::parse(spec.lattice);
    if (lat.is_hex()) throw UsageError("bound-partition runs on z<d>");
    Rational factor = Rational(1) + p.n * pow_weight(p.lambda, 4);
    std::vector<Edge> edges;
    for (int k = 1; k <= 4; ++k) {
      Vertex base(lat.dim(), 0);
      base[0] = 3 * (k - 1);
      Vertex a = base, b = base, c = base;
      a[0] += 1;
      b[1] += 1;
      c[0] += 1;
      c[1] += 1;
      edges.push_back(make_edge(base, a));
      edges.push_back(make_edge(base, b));
      edges.push_back(make_edge(a, c));
      edges.push_back(make_edge(b, c));
      Rational z = partition_function_edges(edges, p, edge_cap);
      ++checked;
      if (z != pow_weight(factor, k))
        fail({{"squares", k}, {"Z", rational_to_string(z)}});
    }
  } else {
    Domain g = spec.build();
    auto polys = polygons_in(g, max_len, edge_cap);
    for (const Polygon& poly : polys) {
      if (suite == "factorization") {
        auto [lhs, rhs] = verify_factorization(g, poly, p, edge_cap);
        ++checked;
        if (lhs < rhs)
          fail({{"polygon_length", poly.length()},
                {"Z", rational_to_string(lhs)},
                {"product", rational_to_string(rhs)}});
        continue;
      }
      for (const Vertex& x : poly.vertex_set()) {
        if (suite == "starting-point") {
          auto [direct, formula] = prob_component_equals(g, x, poly, p, edge_cap);
          ++checked;
          if (direct != formula)
            fail({{"x", x},
                  {"polygon_length", poly.length()},
                  {"direct", rational_to_string(direct)},
                  {"formula", rational_to_string(formula)}});
        } else if (suite == "lemma1") {
          Walk f = orient(poly, x);
          auto occ = occurrences(f, pattern_p_prime(g.lattice()));
          if (occ.empty()) continue;
          // Tiny a: the required count is 1, and the per-occurrence bound
          // (one factor per occurrence) is the one checked.
          auto res = verify_lemma1(g, x, poly, p, 1e-9, edge_cap);
          ++checked;
          if (!res.holds_tight)
            fail({{"x", x},
                  {"polygon_length", poly.length()},
                  {"occurrences", res.occurrence_count},
                  {"ratio", rational_to_string(res.ratio)},
                  {"bound", rational_to_string(res.tight_bound)}});
        } else {
          throw UsageError("unknown suite " + suite);
        }
      }
    }
  }
  report["checked"] = checked;
  report["failures"] = failures;
  report["pass"] = failures == 0;
  write_output(out, report.dump(2) + "\n");
  json manifest{{"command", "verify"},
                {"params",
                 {{"suite", suite},
                  {"lattice", spec.lattice},
                  {"box", spec.box},
                  {"remove", spec.remove},
                  {"lambda", lambda_s},
                  {"n", n_s},
                  {"max_len", max_len},
                  {"edge_cap", edge_cap}}}};
  emit_manifest(out, manifest, t0);
  return failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------

struct CountCache {
  std::filesystem::path dir;
  bool enabled = true;
  int hits = 0;

  static CountCache open(bool no_cache) {
    CountCache c;
    c.enabled = !no_cache;
    const char* env = std::getenv("LOOPON_CACHE");
    c.dir = env ? std::filesystem::path(env)
                : std::filesystem::path(".loopon-cache");
    return c;
  }

  std::filesystem::path file_for(const std::string& lattice,
                                 const std::string& kind, int n, int w,
                                 const std::string& pattern_id) const {
    std::string pat = pattern_id.empty() ? "none" : pattern_id;
    for (char& ch : pat)
      if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
    return dir / (lattice + "-" + kind + "-N" + std::to_string(n) + "-w" +
                  std::to_string(w) + "-" + pat + "-v" + kVersion + ".json");
  }

  bool lookup(const std::string& lattice, const std::string& kind, int n,
              int w, const std::string& pattern_id, std::uint64_t& count) {
    if (!enabled) return false;
    std::ifstream f(file_for(lattice, kind, n, w, pattern_id));
    if (!f) return false;
    json j;
    try {
      f >> j;
    } catch (...) {
      return false;
    }
    if (j.value("lattice", "") != lattice || j.value("kind", "") != kind ||
        j.value("N", -1) != n || j.value("w", -1) != w ||
        j.value("pattern_id", "") != (pattern_id.empty() ? "none" : pattern_id) ||
        j.value("tool_version", "") != kVersion)
      return false;
    count = j.at("count").get<std::uint64_t>();
    ++hits;
    return true;
  }

  void store(const LatticeKind& lat, const std::string& kind, int n, int w,
             const std::string& pattern_id, std::uint64_t count) {
    if (!enabled) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return;
    json j{{"lattice", lat.name()},   {"d", lat.dim()},
           {"kind", kind},            {"N", n},
           {"w", w},                  {"pattern_id", pattern_id.empty() ? "none" : pattern_id},
           {"count", count},          {"tool_version", kVersion}};
    std::ofstream f(file_for(lat.name(), kind, n, w, pattern_id));
    if (f) f << j.dump(2) << "\n";
  }
};

int cmd_counts(const std::string& lattice_s, const std::string& kind,
               int n_min, int n_max, int n_step, double a, bool use_saps,
               bool no_cache, int cap, const std::string& out) {
  auto t0 = std::chrono::steady_clock::now();
  LatticeKind lat = LatticeKind::parse(lattice_s);
  Vertex x(lat.dim(), 0);
  if (n_min < 1 || n_max < n_min || n_step < 1)
    throw UsageError("counts: need 1 <= n-min <= n-max and n-step >= 1");
  CountCache cache = CountCache::open(no_cache);
  Pattern pat = pattern_p_prime(lat);
  std::ostringstream csv;
  std::map<int, std::uint64_t> counts;
  if (kind == "saw" || kind == "sap") {
    csv << "N,count,mu_hat\n";
    for (int n = n_min; n <= n_max; n += n_step) {
      std::uint64_t c;
      if (!cache.lookup(lat.name(), kind, n, 0, "", c)) {
        c = kind == "saw" ? enumerate_saws(lat, x, n, cap)
                          : sap_count(lat, x, n, cap);
        cache.store(lat, kind, n, 0, "", c);
      }
      counts[n] = c;
    }
    auto mu = growth_estimates(counts);
    for (auto& [n, c] : counts)
      csv << n << ',' << c << ',' << fmt_double(mu.at(n)) << '\n';
  } else if (kind == "deficient") {
    const std::string base = use_saps ? "sap" : "saw";
    const std::string dkind = "deficient-" + base;
    csv << "N,w,count,total,fraction\n";
    for (int n = n_min; n <= n_max; n += n_step) {
      int w = static_cast<int>(std::ceil(a * n));
      std::uint64_t c, total;
      if (!cache.lookup(lat.name(), dkind, n, w, pat.id, c)) {
        c = deficient_count(lat, x, n, w, pat,
                            use_saps ? WalkKind::Sap : WalkKind::Saw, cap);
        cache.store(lat, dkind, n, w, pat.id, c);
      }
      if (!cache.lookup(lat.name(), base, n, 0, "", total)) {
        total = use_saps ? sap_count(lat, x, n, cap)
                         : enumerate_saws(lat, x, n, cap);
        cache.store(lat, base, n, 0, "", total);
      }
      csv << n << ',' << w << ',' << c << ',' << total << ','
          << fmt_double(total ? static_cast<double>(c) / total : 0.0) << '\n';
    }
  } else {
    throw UsageError("kind must be saw, sap, or deficient");
  }
  write_output(out, csv.str());
  json manifest{{"command", "counts"},
                {"params",
                 {{"lattice", lattice_s},
                  {"kind", kind},
                  {"n_min", n_min},
                  {"n_max", n_max},
                  {"n_step", n_step},
                  {"a", a},
                  {"sap", use_saps},
                  {"cap", cap},
                  {"no_cache", no_cache}}},
                {"cache_hits", cache.hits}};
  emit_manifest(out, manifest, t0);
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_bound_curve(double mu, double mu_prime, double a_prime,
                    const std::string& grid_s, const std::string& out) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<double> grid;
  std::stringstream ss(grid_s);
  std::string part;
  while (std::getline(ss, part, ',')) grid.push_back(std::stod(part));
  if (grid.empty()) throw UsageError("empty n grid");
  ThresholdInputs in{mu, mu_prime, a_prime};
  auto curve = threshold_curve(grid, in);
  std::ostringstream csv;
  csv << "n,lambda1,lambda1_prime,combined,slope_model\n";
  for (const ThresholdPoint& pt : curve)
    csv << fmt_double(pt.n) << ',' << fmt_double(pt.lambda1) << ','
        << fmt_double(pt.lambda1_prime) << ',' << fmt_double(pt.combined)
        << ',' << fmt_double(pt.slope_model) << '\n';
  write_output(out, csv.str());
  json manifest{{"command", "bound-curve"},
                {"params",
                 {{"mu", mu},
                  {"mu_prime", mu_prime},
                  {"a_prime", a_prime},
                  {"n_grid", grid_s}}}};
  emit_manifest(out, manifest, t0);
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_mc(const DomainSpec& spec, double lambda, double n, double sweeps_d,
           double burn_in_d, std::uint64_t seed, const std::string& mark,
           bool full_recompute, bool compare_exact, int edge_cap,
           const std::string& out) {
  auto t0 = std::chrono::steady_clock::now();
  Domain g = spec.build();
  auto sweeps = static_cast<std::uint64_t>(sweeps_d);
  auto burn_in = static_cast<std::uint64_t>(burn_in_d);
  std::vector<std::size_t> marked;
  for (const Vertex& v : parse_vertex_list(mark)) {
    int idx = g.vertex_index(v);
    if (idx < 0) throw UsageError("marked vertex not in domain");
    marked.push_back(static_cast<std::size_t>(idx));
  }
  ModelParams<double> p{lambda, n};
  McReport report = run_mc(g, p, sweeps, burn_in, seed, marked, full_recompute);
  json result = report.to_json(g);
  if (compare_exact) {
    json tv = json::object();
    for (std::size_t vi : marked) {
      auto exact = loop_length_distribution(g, g.vertices()[vi], p, edge_cap);
      const auto& hist = report.length_histograms.at(vi);
      std::uint64_t total = 0;
      for (auto& [len, c] : hist) total += c;
      double dist = 0;
      std::set<int> lens;
      for (auto& [len, prob] : exact.length_law) lens.insert(len);
      for (auto& [len, c] : hist) lens.insert(len);
      for (int len : lens) {
        double pe = 0, ps = 0;
        if (auto it = exact.length_law.find(len); it != exact.length_law.end())
          pe = it->second;
        if (auto it = hist.find(len); it != hist.end())
          ps = total ? static_cast<double>(it->second) / total : 0;
        dist += std::fabs(pe - ps);
      }
      tv[std::to_string(vi)] = dist / 2;
    }
    result["tv_vs_exact"] = tv;
  }
  write_output(out, result.dump(2) + "\n");
  json manifest{{"command", "mc"},
                {"params",
                 {{"lattice", spec.lattice},
                  {"box", spec.box},
                  {"corner", spec.corner},
                  {"remove", spec.remove},
                  {"lambda", lambda},
                  {"n", n},
                  {"sweeps", sweeps},
                  {"burn_in", burn_in},
                  {"mark", mark},
                  {"full_recompute", full_recompute},
                  {"compare_exact", compare_exact}}},
                {"rng", {{"name", report.rng_name}, {"seed", seed}}}};
  emit_manifest(out, manifest, t0);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"loop-model enumeration, counting, bounds, and sampling"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // z
  auto* z = app.add_subcommand("z", "Partition function and loop-length law");
  DomainSpec z_spec;
  z_spec.add_flags(z);
  std::string z_lambda = "1", z_n = "1", z_mode, z_mark, z_out;
  int z_cap = kDefaultEdgeCap;
  bool z_force = false;
  z->add_option("--lambda", z_lambda, "Edge weight (float or p/q)");
  z->add_option("--n", z_n, "Loop weight (float or p/q)");
  z->add_option("--mode", z_mode, "float or rational (default inferred)");
  z->add_option("--x", z_mark, "Marked vertex for the length law");
  z->add_option("--edge-cap", z_cap, "Enumeration edge cap");
  z->add_flag("--force", z_force, "Lift the edge cap");
  z->add_option("--out", z_out, "Output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Identity/inequality suites");
  DomainSpec v_spec;
  v_spec.box = "4x4";
  std::string v_suite, v_lambda = "1/2", v_n = "1", v_out;
  int v_max_len = 12, v_cap = kDefaultEdgeCap;
  bool v_force = false;
  verify->add_option("--suite", v_suite,
                     "starting-point | factorization | lemma1 | bound-partition")
      ->required();
  verify->add_option("--lattice", v_spec.lattice, "Lattice");
  verify->add_option("--box", v_spec.box, "Box side lengths");
  verify->add_option("--remove", v_spec.remove, "Vertices to delete");
  verify->add_option("--lambda", v_lambda, "Edge weight (p/q)");
  verify->add_option("--n", v_n, "Loop weight (p/q)");
  verify->add_option("--max-len", v_max_len, "Max polygon length");
  verify->add_option("--edge-cap", v_cap, "Enumeration edge cap");
  verify->add_flag("--force", v_force, "Lift the edge cap");
  verify->add_option("--out", v_out, "Output file (default stdout)");

  // counts
  auto* counts = app.add_subcommand("counts", "Walk/polygon/deficient counts");
  std::string c_lattice = "z2", c_kind, c_out;
  int c_min = 1, c_max = 8, c_step = 1, c_cap = kDefaultSawCap;
  double c_a = 0.01;
  bool c_sap = false, c_no_cache = false, c_force = false;
  counts->add_option("--kind", c_kind, "saw | sap | deficient")->required();
  counts->add_option("--lattice", c_lattice, "Lattice");
  counts->add_option("--n-min", c_min, "Smallest N");
  counts->add_option("--n-max", c_max, "Largest N");
  counts->add_option("--n-step", c_step, "N increment");
  counts->add_option("--a", c_a, "Pattern density for deficient counts");
  counts->add_flag("--sap", c_sap, "Deficient counts over polygons");
  counts->add_flag("--no-cache", c_no_cache, "Bypass the count cache");
  counts->add_option("--cap", c_cap, "Walk length cap");
  counts->add_flag("--force", c_force, "Lift the length cap");
  counts->add_option("--out", c_out, "Output file (default stdout)");

  // bound-curve
  auto* curve = app.add_subcommand("bound-curve", "Threshold lower-bound curve");
  double b_mu = 2.64, b_mu_prime = 2.0, b_a_prime = 0.01;
  std::string b_grid = "0,0.25,0.5,1,2", b_out;
  curve->add_option("--mu", b_mu, "Connective-constant estimate");
  curve->add_option("--mu-prime", b_mu_prime, "Deficient growth rate");
  curve->add_option("--a-prime", b_a_prime, "Pattern density exponent");
  curve->add_option("--n-grid", b_grid, "Comma-separated n values");
  curve->add_option("--out", b_out, "Output file (default stdout)");

  // mc
  auto* mc = app.add_subcommand("mc", "Metropolis face-flip sampler");
  DomainSpec m_spec;
  m_spec.lattice = "hex";
  double m_lambda = 0.5, m_n = 1.0, m_sweeps = 10000, m_burn = 1000;
  std::uint64_t m_seed = 1;
  std::string m_mark, m_out;
  int m_cap = kDefaultEdgeCap;
  bool m_full = false, m_compare = false, m_force = false;
  m_spec.add_flags(mc);
  mc->add_option("--lambda", m_lambda, "Edge weight");
  mc->add_option("--n", m_n, "Loop weight");
  mc->add_option("--sweeps", m_sweeps, "Sampling sweeps (after burn-in)");
  mc->add_option("--burn-in", m_burn, "Burn-in sweeps");
  mc->add_option("--seed", m_seed, "RNG seed");
  mc->add_option("--mark", m_mark, "Marked vertices, e.g. \"1,1;2,2\"");
  mc->add_flag("--full-recompute", m_full, "Audit mode: global loop recount");
  mc->add_flag("--compare-exact", m_compare,
               "Add total-variation distance to the enumerated law");
  mc->add_option("--edge-cap", m_cap, "Enumeration cap for --compare-exact");
  mc->add_flag("--force", m_force, "Lift the enumeration cap");
  mc->add_option("--out", m_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  constexpr int kForcedCap = 1000;
  try {
    if (z->parsed())
      return cmd_z(z_spec, z_lambda, z_n, z_mode, z_mark,
                   z_force ? kForcedCap : z_cap, z_out);
    if (verify->parsed())
      return cmd_verify(v_spec, v_suite, v_lambda, v_n, v_max_len,
                        v_force ? kForcedCap : v_cap, v_out);
    if (counts->parsed())
      return cmd_counts(c_lattice, c_kind, c_min, c_max, c_step, c_a, c_sap,
                        c_no_cache, c_force ? kForcedCap : c_cap, c_out);
    if (curve->parsed())
      return cmd_bound_curve(b_mu, b_mu_prime, b_a_prime, b_grid, b_out);
    if (mc->parsed())
      return cmd_mc(m_spec, m_lambda, m_n, m_sweeps, m_burn, m_seed, m_mark,
                    m_full, m_compare, m_force ? kForcedCap : m_cap, m_out);
  } catch (const CapError& e) {
    std::cerr << "cap error: " << e.what() << '\n';
    return 3;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
