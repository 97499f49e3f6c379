#pragma once

#include <span>
#include <vector>

#include "swtomo/types.hpp"

namespace swt {

// Regularized lower incomplete gamma P(a, x); Q(a, x) = 1 - P(a, x).
double regularized_gamma_p(double a, double x);
double regularized_gamma_q(double a, double x);

// Survival function of the chi-square law with dof degrees of freedom.
double chi_square_sf(double x, double dof);

struct Chi2Gof {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

// Pearson goodness-of-fit of observed counts against probs (which need not
// sum to 1; a remainder bin is added when they do not).  Bins with expected
// count below min_expected are merged into the last usable bin.
Chi2Gof chi_square_gof(std::span<const long long> counts, std::span<const double> probs,
                       long long n, double min_expected = 5.0);

// Two-sample Kolmogorov-Smirnov distance between a plain sample and a
// weighted sample; pass_at reports whether the distance is below the
// asymptotic critical value at the given significance, using the weighted
// sample's effective size.
struct KsResult {
  double statistic = 0.0;
  double critical = 0.0;
  double n_eff = 0.0;
  bool pass = false;
};
KsResult ks_two_sample_weighted(std::span<const double> sample, std::span<const double> weighted_values,
                                std::span<const double> weights, double significance);

// Streaming mean / variance (Welford).
class RunningStat {
 public:
  void add(double x);
  long long count() const { return n_; }
  double mean() const { return mean_; }
  double variance() const;  // sample variance
  double stderr_mean() const;

 private:
  long long n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

// Least-squares slope of y against x.
double linear_fit_slope(std::span<const double> x, std::span<const double> y);

}  // namespace swt
