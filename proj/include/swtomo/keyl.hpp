#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "swtomo/partitions.hpp"
#include "swtomo/rng.hpp"
#include "swtomo/schur_blocks.hpp"
#include "swtomo/schur_poly.hpp"
#include "swtomo/types.hpp"

namespace swt {

// Product operator F_1 (x) ... (x) F_t on (C^k)^{(x) t}, kept in factored form.
struct BatchState {
  std::vector<CMat> factors;

  static BatchState power(const CMat& rho, int t);

  int local_dim() const { return factors.empty() ? 0 : static_cast<int>(factors[0].rows()); }
  int order() const { return static_cast<int>(factors.size()); }
  CVec apply(const CVec& v) const;
  double op_norm_product() const;
  CMat dense() const;
};

struct KeylConfig {
  int max_trials = 10000;   // rejection proposals before falling back
  int chain_length = 512;   // independence Metropolis steps after burn-in
  int burn_in = 128;
  bool record_outcomes = false;
};

struct SamplerStats {
  long long batches = 0;
  long long proposals = 0;
  long long mh_fallbacks = 0;
  long long mh_accepts = 0;
  void merge(const SamplerStats& o);
};

struct KeylOutcome {
  Partition lam;
  CMat u;
  CMat estimate;  // U diag(lam/t) U^dagger
  int accept_trials = 0;
  bool exact_sampler = true;  // false when the Metropolis fallback produced U
};

struct SamplerBudgetError : std::runtime_error {
  SamplerBudgetError(std::string msg, long long proposals_used, int chain_steps)
      : std::runtime_error(std::move(msg)), proposals(proposals_used), chain(chain_steps) {}
  long long proposals;
  int chain;
};

// tr(Pi_lam rho^{(x) t}) for every lam with at most d parts; agrees with
// sw_pmf(t, d, spectrum(rho)).
SwDistribution weak_schur_probs(const CMat& rho, int t);

// Same law for a general product batch, in the cache's block order.
RVec weak_schur_probs_batch(const BatchState& batch, const SchurCache& cache);

// s(U) = tr(U^{(x) t} M_lam U^{dagger (x) t} X): the conditional density of
// Keyl's refinement over Haar measure, up to the 1/q_lam normalizer.
double keyl_s_value(const BatchState& batch, const SchurBlock& block, const CMat& u);

// Conditional U | lam by rejection (envelope dim_syt(lam) ||X||_op^t) with an
// independence Metropolis fallback.
CMat sample_keyl_u(const BatchState& batch, const SchurBlock& block, Rng& rng,
                   const KeylConfig& config, int* trials, bool* exact,
                   SamplerStats* stats = nullptr);

KeylOutcome sample_keyl_batch(const BatchState& batch, const SchurCache& cache, Rng& rng,
                              const KeylConfig& config = {}, SamplerStats* stats = nullptr);

KeylOutcome sample_keyl(const CMat& rho, int t, Rng& rng, const KeylConfig& config = {});

// Rank-1 refinement of a Keyl outcome: a unit vector x = U^{(x) t} b with b an
// orthonormal column of range(M_lam), drawn with the Born weights.  Used for
// transcript diagnostics.
struct Rank1Outcome {
  CVec x;
  Partition lam;
  double weight = 0.0;  // dim_ssyt(lam, d), the POVM density scale
};
Rank1Outcome sample_keyl_rank1(const BatchState& batch, const SchurCache& cache, Rng& rng,
                               const KeylConfig& config = {});

struct BatchMeans {
  CMat mean;
  std::vector<KeylOutcome> records;  // retained only when configured
  SamplerStats stats;
};

BatchMeans keyl_batch_means(const CMat& rho, int t, int m, Rng& rng,
                            const KeylConfig& config = {});

}  // namespace swt
