#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "swtomo/partitions.hpp"
#include "swtomo/types.hpp"

namespace swt {

// Complete homogeneous symmetric polynomial h_k evaluated at alpha.
double complete_homogeneous(int k, const RVec& alpha);

// Schur polynomial s_lam(alpha) via the Jacobi-Trudi determinant in complete
// homogeneous polynomials.  Returns 0 when lam has more than alpha.size()
// parts.  Stable for nonnegative alpha.
double schur_poly(const Partition& lam, const RVec& alpha);

// Law of the partition outcome of weak Schur sampling on a state with
// spectrum alpha: p(lam) = dim_syt(lam) * s_lam(alpha).
struct SwDistribution {
  int t = 0;
  int d = 0;
  RVec spectrum;
  std::vector<std::pair<Partition, double>> table;  // canonical order

  double prob_of(const Partition& lam) const;
  double total_probability() const;
  // E[sum_i lambda_i^2] under this law.
  double mean_sum_squares() const;
};

// Exact pmf table.  alpha is renormalized when |sum - 1| <= 1e-9 and rejected
// otherwise; negative entries are a domain error.
SwDistribution sw_pmf(int t, int d, RVec alpha);

// theta = E_{lam ~ SW^t_d}[sum lambda_i^2] - t^2/d  (uniform spectrum).
double theta(int t, int d);

// CSV export, columns: parts (dash-joined), probability (12 significant digits).
void write_sw_csv(const SwDistribution& dist, std::ostream& os);

}  // namespace swt
