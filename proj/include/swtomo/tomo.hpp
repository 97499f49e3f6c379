#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swtomo/keyl.hpp"
#include "swtomo/sources.hpp"
#include "swtomo/types.hpp"

namespace swt {

struct CopyBudget {
  std::vector<std::pair<std::string, long long>> per_stage;
  void add(std::string stage, long long n);
  long long total() const;
};

struct BalancedEstimate {
  CMat e_hat;
  double theta_used = 0.0;
  int m = 0;
  int t = 0;  // effective batch size used
  SamplerStats stats;
  std::vector<CMat> records;  // per-batch D_j when configured
};

// Keyl-POVM deviation estimator: E_hat = (t(d^2-1)/(d theta)) (mean D - I/d).
// Requires t <= d^2; when floor(0.01 d^2) >= 1 and t >= 0.01 d^2 the engine
// switches to floor(0.01 d^2)-entangled batches (constant-factor loss only).
BalancedEstimate learn_balanced(StateSource& source, int t, int m, Rng& rng,
                                const KeylConfig& config = {});

struct RefinedConfig {
  long long n_baseline = 2000;  // copies for the crude unentangled stage
  int m_batches = 500;          // Keyl batches for the refinement stage
  int repeats = 1;              // geometric-median repetitions
  KeylConfig keyl;
};

// Budget heuristics n ~ d^2/(sqrt(t) eps^2), m ~ d^2/(t^{1.5} eps^2),
// repeats ~ log(1/delta); constants are free.
RefinedConfig refined_budget(int d, int t, double eps, double delta, double scale = 1.0);

// Two-stage estimate for states with operator norm at most 4/d: crude
// baseline, cap-projection, complement mixture, Keyl refinement, final
// projection; repeated and aggregated by geometric median.
CMat learn_balanced_refined(StateSource& source, int t, const RefinedConfig& config, Rng& rng,
                            CopyBudget* budget = nullptr);

// Haar-basis single-copy tomography with the unbiased estimator
// (d+1)|v><v| - I, averaged over n copies and projected to density matrices.
CMat unentangled_baseline(StateSource& source, long long n, Rng& rng);
// Same, returning the unprojected mean (used by tests for unbiasedness).
CMat unentangled_baseline_raw(StateSource& source, long long n, Rng& rng);

// Weiszfeld iteration under the Frobenius norm (tolerance 1e-9, at most 500
// iterations, coincident points regularized by 1e-12).
CMat geometric_median(std::span<const CMat> points);

// Learn a state known to be spectrally bounded: diagonalize rho_prime, build
// the split spec from its spectrum, learn the split state with the refined
// estimator, and map back through rec.
CMat learn_bounded(StateSource& source, const CMat& rho_prime, int t, const RefinedConfig& config,
                   Rng& rng, CopyBudget* budget = nullptr);

struct ProjectorResult {
  CMat estimate;          // beta_hat * (P rho_tilde P), supported inside P
  double beta_hat = 0.0;
  bool precondition_ok = true;  // false when beta_hat < 0.09
};

// Estimate beta = tr(P rho P) from two-outcome measurements, filter batches
// by per-copy P outcomes, and run learn_bounded on the conditioned state with
// t' = max(1, floor(t beta/2)).
ProjectorResult learn_projector(StateSource& source, const CMat& rho_prime, const CMat& p, int t,
                                long long n_beta, const RefinedConfig& config, Rng& rng,
                                CopyBudget* budget = nullptr);

struct ProjectorLadder {
  CMat base_estimate;
  CMat unitary;
  struct Level {
    int j = 0;
    double threshold = 0.0;
    CMat p;
    CMat estimate;
    bool degraded = false;
  };
  std::vector<Level> levels;
};

struct FullLearnConfig {
  double eps = 0.1;
  double delta = 0.1;
  long long n_baseline = 20000;
  long long n_beta = 500;
  RefinedConfig refined;
  double t_bound_slack = 4.0;  // multiplicative slack on the t upper bound
};

struct FullLearnResult {
  CMat rho_hat;
  CopyBudget budget;
  bool degraded = false;
  bool t_bound_warning = false;
  ProjectorLadder ladder;
  SamplerStats stats;
};

// Full multi-stage pipeline: recenter through sigma = (rho + I/d)/2, crude
// baseline, eigenvalue ladder with per-level projector refinement, aggregate,
// recover trunc(2 sigma_hat - I/d) normalized.
FullLearnResult full_learn(StateSource& source, int t, const FullLearnConfig& config, Rng& rng);

}  // namespace swt
