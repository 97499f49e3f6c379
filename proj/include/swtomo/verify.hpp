#pragma once

#include <limits>
#include <string>
#include <vector>

#include "swtomo/rng.hpp"
#include "swtomo/types.hpp"

namespace swt {

// One named invariant check with the measured quantities, reusable by the
// CLI verify/diagnostics commands and by the acceptance suite.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  // Populated by bound-style diagnostics for the JSON report.
  double lhs = std::numeric_limits<double>::quiet_NaN();
  double rhs = std::numeric_limits<double>::quiet_NaN();
  double stderr_mean = std::numeric_limits<double>::quiet_NaN();
};

// Completeness, idempotency, orthogonality and traces of the isotypic
// projectors at (d, t).
CheckResult check_schur_completeness(int d, int t, double tol);

// tr(Pi_lam rho^{(x) t}) against dim_syt(lam) s_lam(spectrum) on random states.
CheckResult check_born_consistency(int d, int t, int n_states, double tol, Rng rng);

// Chi-square of the RSK sampler against the exact pmf.
CheckResult check_rsk_chi_square(int t, int d, const RVec& alpha, long long n,
                                 double significance, Rng rng);

// Exact second-moment bound E[sum lam^2] <= 2(||alpha||^2 t^2 + t^{1.5}).
CheckResult check_sw_moment_bound(int t_max, int d_max);

// Empirical P[sum lam^2 >= t^{1.5}/4] >= 1/2 - 3 sigma.
CheckResult check_sw_typical_mass(int t_max, int d_max, int n, Rng rng);

// G_1 of every orthonormal basis vector of range(M_lam) equals diag(lam).
CheckResult check_keyl_block_identity(int d, int t, double tol);

// Monte-Carlo POVM completeness: sum_lam dim_v E_U[U M U^dag] = I entrywise.
CheckResult check_povm_validity(int d, int t, int n, Rng rng);

// Mean of the balanced estimator at rho = I/d + e_scale diag(1,-1,...) within
// max(5 stderr, 10 t^3 ||E||_F^2 / theta) of E.
CheckResult check_estimator_mean(int d, int t, double e_scale, int m, Rng rng);

// E||D - I/d||_F^2 = E_SW[sum lam^2]/t^2 - 1/d at rho = I/d (5 stderr).
CheckResult check_variance_theta(int d, int t, int m, Rng rng);

// Empirical MSE of the balanced estimator non-increasing over ts (2 sigma).
CheckResult check_t_benefit(int d, const std::vector<int>& ts, double e_frobenius, int m,
                            int reps, Rng rng);

// rec(split(M)) identity, norm bounds, density preservation, eigenvalue control.
CheckResult check_split_identity(int n_cases, double tol, Rng rng);

// Outcome law of the split measurement simulation against the exact Born law
// of split(rho)^{(x) t}.
CheckResult check_split_measurement(int d, int t, long long n, double significance, Rng rng);

// Outcome law of the mixture simulation against the exact mixture Born law.
CheckResult check_mixture_simulation(int d, int t, int n_povms, long long n, double significance,
                                     Rng rng);

// ||G_1(v)||_F^2 <= sum_lam ||Pi_lam v||^2 sum lam_i^2 on random unit vectors.
CheckResult check_skewness_random(int d, int t, int n_vectors, Rng rng);

// Rotation-averaging bound with logged margin.
CheckResult check_rotation_average(int d, int t, const CMat& e, int n, Rng rng);

// Linearization chi-square bound with logged margin.
CheckResult check_linearization_bound(int d, int t, double e_frobenius, int n, Rng rng);

// Full pipeline on seeded hard instances: median trace distance at the top
// budget and a monotone error curve across budgets.
struct HardRunSummary {
  std::vector<long long> budgets;
  std::vector<double> mean_error;
  std::vector<double> stderr_error;
  double median_top = 0.0;
  long long median_copies_top = 0;
};
CheckResult check_full_learn_hard(int d, int t, double gue_sigma, int n_instances,
                                  const std::vector<long long>& budgets, double median_threshold,
                                  Rng rng, HardRunSummary* summary = nullptr);

}  // namespace swt
