#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "loopon/lattice.hpp"

namespace loopon {

struct ThresholdInputs {
  double mu = 0;        // connective-constant estimate
  double mu_prime = 0;  // growth rate of pattern-deficient counts, < mu
  double a_prime = 0;   // pattern density, in (0, 1)

  void validate() const;
};

// 2 / (mu + mu'); strictly greater than 1/mu when mu' < mu.
double lambda1_prime(double mu, double mu_prime);

struct RootResult {
  double lambda = 0;
  double residual = 0;           // |lambda mu - (1 + lambda^4 n)^{a'}|
  bool multiple_roots = false;   // second sign change seen in the bracket
};

// Smallest lambda > 1/mu solving lambda mu = (1 + lambda^4 n)^{a'}, by
// bisection to 1e-12; returns exactly 1/mu for n = 0.
RootResult solve_lambda1(double n, const ThresholdInputs& in);

// a' / mu^5: the small-n slope of lambda_1(n) above 1/mu.
double taylor_slope(const ThresholdInputs& in);

// min{lambda_1', lambda_1(n)}.
double combined_lower_bound(double n, const ThresholdInputs& in);

struct ThresholdPoint {
  double n = 0;
  double lambda1 = 0;
  double lambda1_prime = 0;
  double combined = 0;
  double slope_model = 0;  // 1/mu + (a'/mu^5) n
};

std::vector<ThresholdPoint> threshold_curve(const std::vector<double>& n_grid,
                                            const ThresholdInputs& in);

// n * sum_{N=ell+1}^{N_max} |SAP_x(N, ceil(a'N), P')| lambda^N over the
// supplied deficient counts.
double tail_first_term(int ell, double lambda, double n, double a_prime,
                       const std::map<int, std::uint64_t>& deficient_counts);

// n * sum_{N=ell+1}^{N_max} |SAP_x(N)| lambda^N (1 + lambda^4 n)^{-ceil(a'N)}
// over the supplied polygon counts (exact counts replace the N mu^N majorant).
double tail_second_term(int ell, double lambda, double n, double a_prime,
                        const std::map<int, std::uint64_t>& sap_counts);

}  // namespace loopon
