#pragma once

#include <string>
#include <vector>

#include "swtomo/keyl.hpp"
#include "swtomo/rng.hpp"
#include "swtomo/types.hpp"

namespace swt {

// First-order truncation of rho^{(x) t} around I/d:
//   X' = (I/d)^{(x) t} + sum over placements of E (x) (I/d)^{(x) t-1},
// with E = rho - I/d.  Hermitian and trace 1, not necessarily PSD.
CMat linearize(const CMat& rho, int t);

// Apply X - X' (the order >= 2 remainder) to a vector, expanded exactly over
// mode subsets so that tiny E produces no cancellation error.
CVec apply_linearization_remainder(const CMat& rho, int t, const CVec& v);

struct RotationAverageResult {
  double empirical_abs_mean = 0.0;
  double stderr_mean = 0.0;
  double bound = 0.0;  // (4t)^{4t} ||E||_F^t / d^t
};

// Monte-Carlo |E_U <(U E U^dagger)^{(x) t}, v v^dagger>| at a Haar-random unit
// v, against the rotation-averaging bound.
RotationAverageResult rotation_average_check(const CMat& e, int t, int n, Rng& rng);

struct Chi2Result {
  double estimate = 0.0;
  double stderr_mean = 0.0;
  double bound = 0.0;  // (100 t)^4 ||E||_F^4
  bool precondition_ok = true;
};

// Importance-sampled chi-square statistic of X vs X' over Keyl's POVM, using
// the maximally mixed outcome law as the proposal.  The bound applies when
// ||E||_F <= (0.01/t)^4; outside that range the result is reported only.
Chi2Result linearization_chi2(const CMat& rho, int t, int n, Rng& rng);

struct SkewnessResult {
  double lhs = 0.0;  // ||G_1(v)||_F^2
  double rhs = 0.0;  // sum_lam ||Pi_lam v||^2 sum_i lam_i^2
};

SkewnessResult skewness_check(const CVec& v, int d, int t);

struct TranscriptRecord {
  std::vector<CVec> outcomes;   // unit vectors x_j
  std::vector<double> weights;  // POVM density scales (provenance)
  std::string state_label;
};

// Rank-1 Keyl transcript of m measurements of rho0^{(x) t}.
TranscriptRecord make_keyl_transcript(const CMat& rho0, int t, int m, Rng& rng,
                                      const KeylConfig& config = {});

struct WellBalancedStats {
  double a_stat = 0.0;
  double b_stat = 0.0;
  int m = 0;
  int t = 0;
  int d = 0;
};

// A = sum_j sum_lam ||Pi_lam x_j||^2 (sum_i lam_i^2) / (d^t x_j^dag rho0^{(x)t} x_j);
// B = || -C(t,2) m I + d^{-(t-2)} sum_j G_2(x_j)/(x_j^dag rho0^{(x)t} x_j) ||_op.
WellBalancedStats well_balanced_stats(const TranscriptRecord& transcript, const CMat& rho0, int t);

// sum_j log(x_j^dag rho^{(x)t} x_j / x_j^dag rho0^{(x)t} x_j).
// Throws std::domain_error on a nonpositive quadratic form.
double likelihood_ratio_product(const TranscriptRecord& transcript, const CMat& rho,
                                const CMat& rho0, int t);

}  // namespace swt
