#include "swtomo/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace swt {

namespace {

// Series expansion of P(a, x), valid for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < 500; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-15) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a, x) (modified Lentz), valid for x >= a + 1.
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    double an = -static_cast<double>(i) * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-15) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double regularized_gamma_p(double a, double x) {
  if (a <= 0.0 || x < 0.0) throw std::domain_error("regularized_gamma_p: invalid arguments");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_cf(a, x);
}

double regularized_gamma_q(double a, double x) {
  if (a <= 0.0 || x < 0.0) throw std::domain_error("regularized_gamma_q: invalid arguments");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double chi_square_sf(double x, double dof) {
  return regularized_gamma_q(dof / 2.0, x / 2.0);
}

Chi2Gof chi_square_gof(std::span<const long long> counts, std::span<const double> probs,
                       long long n, double min_expected) {
  if (counts.size() != probs.size())
    throw std::invalid_argument("chi_square_gof: size mismatch");
  std::vector<double> expected;
  std::vector<double> observed;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    expected.push_back(probs[i] * static_cast<double>(n));
    observed.push_back(static_cast<double>(counts[i]));
  }
  double p_sum = std::accumulate(probs.begin(), probs.end(), 0.0);
  long long c_sum = std::accumulate(counts.begin(), counts.end(), 0ll);
  if (p_sum < 1.0 - 1e-12 || c_sum < n) {
    expected.push_back(static_cast<double>(n) * std::max(0.0, 1.0 - p_sum));
    observed.push_back(static_cast<double>(n - c_sum));
  }

  // Merge low-expectation bins (ascending by expected count) into a pool.
  std::vector<std::size_t> order(expected.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return expected[a] < expected[b]; });
  std::vector<double> e_merged, o_merged;
  double e_pool = 0.0, o_pool = 0.0;
  for (std::size_t idx : order) {
    e_pool += expected[idx];
    o_pool += observed[idx];
    if (e_pool >= min_expected) {
      e_merged.push_back(e_pool);
      o_merged.push_back(o_pool);
      e_pool = o_pool = 0.0;
    }
  }
  if (e_pool > 0.0 && !e_merged.empty()) {
    e_merged.back() += e_pool;
    o_merged.back() += o_pool;
  }

  Chi2Gof result;
  if (e_merged.size() < 2) return result;  // degenerate: nothing to test
  for (std::size_t i = 0; i < e_merged.size(); ++i) {
    double diff = o_merged[i] - e_merged[i];
    result.statistic += diff * diff / e_merged[i];
  }
  result.dof = static_cast<int>(e_merged.size()) - 1;
  result.p_value = chi_square_sf(result.statistic, result.dof);
  return result;
}

KsResult ks_two_sample_weighted(std::span<const double> sample, std::span<const double> weighted_values,
                                std::span<const double> weights, double significance) {
  if (weighted_values.size() != weights.size())
    throw std::invalid_argument("ks_two_sample_weighted: size mismatch");
  std::vector<double> a(sample.begin(), sample.end());
  std::sort(a.begin(), a.end());

  std::vector<std::size_t> order(weighted_values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return weighted_values[i] < weighted_values[j];
  });
  double w_total = 0.0, w_sq = 0.0;
  for (double w : weights) {
    w_total += w;
    w_sq += w * w;
  }
  if (w_total <= 0.0) throw std::domain_error("ks_two_sample_weighted: nonpositive weights");

  // Sweep the merged value axis, tracking both CDFs.
  KsResult r;
  std::size_t ia = 0, ib = 0;
  double cb = 0.0;
  while (ia < a.size() || ib < order.size()) {
    double va = ia < a.size() ? a[ia] : std::numeric_limits<double>::infinity();
    double vb = ib < order.size() ? weighted_values[order[ib]] : std::numeric_limits<double>::infinity();
    double v = std::min(va, vb);
    while (ia < a.size() && a[ia] <= v) ++ia;
    while (ib < order.size() && weighted_values[order[ib]] <= v) cb += weights[order[ib++]];
    double fa = static_cast<double>(ia) / static_cast<double>(a.size());
    double fb = cb / w_total;
    r.statistic = std::max(r.statistic, std::abs(fa - fb));
  }
  r.n_eff = w_total * w_total / w_sq;
  double n1 = static_cast<double>(a.size());
  double c_alpha = std::sqrt(-std::log(significance / 2.0) / 2.0);
  r.critical = c_alpha * std::sqrt((n1 + r.n_eff) / (n1 * r.n_eff));
  r.pass = r.statistic <= r.critical;
  return r;
}

void RunningStat::add(double x) {
  ++n_;
  double delta = x - mean_;
  mean_ += delta / static_cast<double>(n_);
  m2_ += delta * (x - mean_);
}

double RunningStat::variance() const {
  return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0;
}

double RunningStat::stderr_mean() const {
  return n_ > 0 ? std::sqrt(variance() / static_cast<double>(n_)) : 0.0;
}

double linear_fit_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("linear_fit_slope: need matching samples");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace swt
