#include "swtomo/schur_poly.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace swt {

double complete_homogeneous(int k, const RVec& alpha) {
  if (k < 0) return 0.0;
  if (k == 0) return 1.0;
  // h[j] accumulates h_j over a growing variable set.
  std::vector<double> h(static_cast<std::size_t>(k) + 1, 0.0);
  h[0] = 1.0;
  for (int v = 0; v < alpha.size(); ++v) {
    double x = alpha[v];
    for (int j = 1; j <= k; ++j) h[j] += x * h[j - 1];
  }
  return h[k];
}

double schur_poly(const Partition& lam, const RVec& alpha) {
  int ell = lam.num_parts();
  int d = static_cast<int>(alpha.size());
  if (ell > d) return 0.0;
  if (ell == 0) return 1.0;
  RMat jt(ell, ell);
  for (int i = 0; i < ell; ++i)
    for (int j = 0; j < ell; ++j)
      jt(i, j) = complete_homogeneous(lam.parts[i] - i + j, alpha);
  return jt.determinant();
}

double SwDistribution::prob_of(const Partition& lam) const {
  for (const auto& [p, q] : table)
    if (p == lam) return q;
  return 0.0;
}

double SwDistribution::total_probability() const {
  double s = 0.0;
  for (const auto& [p, q] : table) s += q;
  return s;
}

double SwDistribution::mean_sum_squares() const {
  double s = 0.0;
  for (const auto& [p, q] : table) s += q * static_cast<double>(sum_squares(p));
  return s;
}

SwDistribution sw_pmf(int t, int d, RVec alpha) {
  if (alpha.size() != d) throw std::invalid_argument("sw_pmf: alpha length must equal d");
  for (int i = 0; i < d; ++i)
    if (alpha[i] < 0.0) throw std::domain_error("sw_pmf: alpha entries must be nonnegative");
  double sum = alpha.sum();
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::domain_error("sw_pmf: alpha must sum to 1 within 1e-9");
  alpha /= sum;

  SwDistribution dist;
  dist.t = t;
  dist.d = d;
  dist.spectrum = alpha;
  for (const Partition& lam : enumerate_partitions(t, d)) {
    double p = static_cast<double>(dim_syt(lam)) * schur_poly(lam, alpha);
    dist.table.emplace_back(lam, p);
  }
  return dist;
}

double theta(int t, int d) {
  if (t < 1 || d < 1) throw std::invalid_argument("theta: t and d must be positive");
  RVec uniform = RVec::Constant(d, 1.0 / d);
  SwDistribution dist = sw_pmf(t, d, uniform);
  return dist.mean_sum_squares() - static_cast<double>(t) * t / d;
}

void write_sw_csv(const SwDistribution& dist, std::ostream& os) {
  os << "parts,probability\n";
  char buf[64];
  for (const auto& [lam, p] : dist.table) {
    std::snprintf(buf, sizeof(buf), "%.12g", p);
    os << lam.to_string() << ',' << buf << '\n';
  }
}

}  // namespace swt
