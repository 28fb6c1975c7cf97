#include "loopon/bounds.hpp"

#include <cmath>

namespace loopon {

void ThresholdInputs::validate() const {
  if (!(mu > 0) || !(mu_prime > 0) || mu_prime >= mu)
    throw UsageError("threshold inputs require 0 < mu' < mu");
  if (!(a_prime > 0) || a_prime >= 1)
    throw UsageError("threshold inputs require a' in (0, 1)");
}

double lambda1_prime(double mu, double mu_prime) {
  if (!(mu_prime > 0) || !(mu_prime < mu))
    throw UsageError("lambda1_prime requires 0 < mu' < mu");
  return 2.0 / (mu + mu_prime);
}

namespace {

double residual_fn(double lambda, double n, double a_prime, double mu) {
  return lambda * mu - std::pow(1.0 + std::pow(lambda, 4) * n, a_prime);
}

}  // namespace

RootResult solve_lambda1(double n, const ThresholdInputs& in) {
  in.validate();
  if (n < 0) throw UsageError("solve_lambda1: n must be >= 0");
  RootResult res;
  const double lo0 = 1.0 / in.mu;
  if (n == 0) {
    res.lambda = lo0;
    res.residual = 0;
    return res;
  }
  if (in.a_prime > 0.25)
    throw UsageError("solve_lambda1: a' must be in (0, 1/4] for a bracketed root");
  // g(1/mu) < 0 for n > 0; scan upward for the first sign change, then bisect.
  const double cap = 10.0 / in.mu;
  const int scan_steps = 4096;
  double lo = lo0, hi = cap;
  bool bracketed = false;
  double prev = lo0, fprev = residual_fn(lo0, n, in.a_prime, in.mu);
  int sign_changes = 0;
  for (int i = 1; i <= scan_steps; ++i) {
    double x = lo0 + (cap - lo0) * i / scan_steps;
    double fx = residual_fn(x, n, in.a_prime, in.mu);
    if (fprev < 0 && fx >= 0) {
      ++sign_changes;
      if (!bracketed) {
        lo = prev;
        hi = x;
        bracketed = true;
      }
    } else if (bracketed && fprev >= 0 && fx < 0) {
      ++sign_changes;
    }
    prev = x;
    fprev = fx;
  }
  if (!bracketed)
    throw UsageError("solve_lambda1: no root in bracket for given a', n");
  res.multiple_roots = sign_changes > 1;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    double mid = 0.5 * (lo + hi);
    if (residual_fn(mid, n, in.a_prime, in.mu) < 0)
      lo = mid;
    else
      hi = mid;
  }
  res.lambda = 0.5 * (lo + hi);
  res.residual = std::fabs(residual_fn(res.lambda, n, in.a_prime, in.mu));
  return res;
}

double taylor_slope(const ThresholdInputs& in) {
  in.validate();
  return in.a_prime / std::pow(in.mu, 5);
}

double combined_lower_bound(double n, const ThresholdInputs& in) {
  return std::min(lambda1_prime(in.mu, in.mu_prime),
                  solve_lambda1(n, in).lambda);
}

std::vector<ThresholdPoint> threshold_curve(const std::vector<double>& n_grid,
                                            const ThresholdInputs& in) {
  in.validate();
  const double lp = lambda1_prime(in.mu, in.mu_prime);
  const double slope = taylor_slope(in);
  std::vector<ThresholdPoint> out;
  out.reserve(n_grid.size());
  for (double n : n_grid) {
    ThresholdPoint pt;
    pt.n = n;
    pt.lambda1 = solve_lambda1(n, in).lambda;
    pt.lambda1_prime = lp;
    pt.combined = std::min(pt.lambda1, lp);
    pt.slope_model = 1.0 / in.mu + slope * n;
    out.push_back(pt);
  }
  return out;
}

double tail_first_term(int ell, double lambda, double n, double a_prime,
                       const std::map<int, std::uint64_t>& deficient_counts) {
  double sum = 0;
  for (const auto& [len, count] : deficient_counts) {
    if (len <= ell) continue;
    sum += static_cast<double>(count) * std::pow(lambda, len);
  }
  (void)a_prime;  // the counts are already taken at threshold ceil(a'N)
  return n * sum;
}

double tail_second_term(int ell, double lambda, double n, double a_prime,
                        const std::map<int, std::uint64_t>& sap_counts) {
  double sum = 0;
  const double base = 1.0 + std::pow(lambda, 4) * n;
  for (const auto& [len, count] : sap_counts) {
    if (len <= ell) continue;
    double w = static_cast<double>(std::ceil(a_prime * len));
    sum += static_cast<double>(count) * std::pow(lambda, len) *
           std::pow(base, -w);
  }
  return n * sum;
}

}  // namespace loopon
