#include "swtomo/keyl.hpp"

#include <cmath>

#include "swtomo/density.hpp"
#include "swtomo/random_matrices.hpp"
#include "swtomo/tensor_ops.hpp"

namespace swt {

BatchState BatchState::power(const CMat& rho, int t) {
  BatchState b;
  b.factors.assign(t, rho);
  return b;
}

CVec BatchState::apply(const CVec& v) const {
  return apply_factors(factors, v, local_dim());
}

double BatchState::op_norm_product() const {
  double p = 1.0;
  for (const CMat& f : factors) p *= hermitian_eigenvalues_desc(f).cwiseAbs().maxCoeff();
  return p;
}

CMat BatchState::dense() const {
  return kron_list(factors);
}

void SamplerStats::merge(const SamplerStats& o) {
  batches += o.batches;
  proposals += o.proposals;
  mh_fallbacks += o.mh_fallbacks;
  mh_accepts += o.mh_accepts;
}

namespace {

double real_trace_product(const RMat& a, const CMat& x) {
  // tr(a x) for real symmetric a.
  double s = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) s += a(i, j) * x(j, i).real();
  return s;
}

RVec clamped_spectrum(const CMat& rho) {
  RVec eigs = hermitian_eigenvalues_desc(rho);
  for (int i = 0; i < eigs.size(); ++i) eigs[i] = std::max(0.0, eigs[i]);
  return eigs;
}

}  // namespace

SwDistribution weak_schur_probs(const CMat& rho, int t) {
  int d = static_cast<int>(rho.rows());
  auto cache = SchurCache::get(d, t);
  CMat x = kron_power(rho, t);
  SwDistribution dist;
  dist.t = t;
  dist.d = d;
  dist.spectrum = clamped_spectrum(rho);
  for (const SchurBlock& block : cache->blocks())
    dist.table.emplace_back(block.lam, real_trace_product(block.pi, x));
  return dist;
}

RVec weak_schur_probs_batch(const BatchState& batch, const SchurCache& cache) {
  CMat x = batch.dense();
  RVec probs(static_cast<int>(cache.blocks().size()));
  for (std::size_t i = 0; i < cache.blocks().size(); ++i)
    probs[static_cast<int>(i)] = real_trace_product(cache.blocks()[i].pi, x);
  return probs;
}

double keyl_s_value(const BatchState& batch, const SchurBlock& block, const CMat& u) {
  int t = batch.order();
  int k = batch.local_dim();
  double s = 0.0;
  for (int j = 0; j < block.basis.cols(); ++j) {
    CVec b = block.basis.col(j).cast<Complex>();
    CVec rotated = apply_kron_power(u, t, b, k);
    s += rotated.dot(batch.apply(rotated)).real();
  }
  return s;
}

CMat sample_keyl_u(const BatchState& batch, const SchurBlock& block, Rng& rng,
                   const KeylConfig& config, int* trials, bool* exact, SamplerStats* stats) {
  int k = batch.local_dim();
  double envelope = static_cast<double>(block.dim_sp) * batch.op_norm_product();
  CMat last_proposal;
  double last_s = 0.0;
  for (int trial = 1; trial <= config.max_trials; ++trial) {
    CMat u = haar_unitary(k, rng);
    double s = keyl_s_value(batch, block, u);
    if (stats) ++stats->proposals;
    last_proposal = u;
    last_s = s;
    if (rng.uniform() * envelope <= s) {
      if (trials) *trials = trial;
      if (exact) *exact = true;
      return u;
    }
  }

  // Independence Metropolis fallback, Haar proposals against the same target.
  if (stats) ++stats->mh_fallbacks;
  CMat state = last_proposal;
  double state_s = last_s;
  int accepted = 0;
  int total_steps = config.burn_in + config.chain_length;
  for (int step = 0; step < total_steps; ++step) {
    CMat u = haar_unitary(k, rng);
    double s = keyl_s_value(batch, block, u);
    if (stats) ++stats->proposals;
    if (state_s <= 0.0 || rng.uniform() <= s / state_s) {
      state = u;
      state_s = s;
      ++accepted;
      if (stats) ++stats->mh_accepts;
    }
  }
  if (accepted == 0)
    throw SamplerBudgetError("keyl sampler: rejection and Metropolis budgets exhausted",
                             config.max_trials + total_steps, total_steps);
  if (trials) *trials = config.max_trials + total_steps;
  if (exact) *exact = false;
  return state;
}

KeylOutcome sample_keyl_batch(const BatchState& batch, const SchurCache& cache, Rng& rng,
                              const KeylConfig& config, SamplerStats* stats) {
  if (stats) ++stats->batches;
  RVec probs = weak_schur_probs_batch(batch, cache);
  int idx = rng.categorical(probs);
  const SchurBlock& block = cache.blocks()[idx];

  KeylOutcome out;
  out.lam = block.lam;
  out.u = sample_keyl_u(batch, block, rng, config, &out.accept_trials, &out.exact_sampler, stats);

  int t = batch.order();
  int k = batch.local_dim();
  RVec diag = RVec::Zero(k);
  for (int i = 0; i < block.lam.num_parts(); ++i)
    diag[i] = static_cast<double>(block.lam.parts[i]) / t;
  out.estimate = out.u * diag.asDiagonal() * out.u.adjoint();
  return out;
}

KeylOutcome sample_keyl(const CMat& rho, int t, Rng& rng, const KeylConfig& config) {
  int d = static_cast<int>(rho.rows());
  auto cache = SchurCache::get(d, t);
  return sample_keyl_batch(BatchState::power(rho, t), *cache, rng, config, nullptr);
}

Rank1Outcome sample_keyl_rank1(const BatchState& batch, const SchurCache& cache, Rng& rng,
                               const KeylConfig& config) {
  KeylOutcome outcome = sample_keyl_batch(batch, cache, rng, config, nullptr);
  const SchurBlock& block = cache.block(outcome.lam);
  int t = batch.order();
  int k = batch.local_dim();

  // Within the accepted (lam, U), component j is observed with probability
  // proportional to (U b_j)^dagger X (U b_j).
  RVec weights(static_cast<int>(block.basis.cols()));
  std::vector<CVec> rotated(block.basis.cols());
  for (int j = 0; j < block.basis.cols(); ++j) {
    CVec b = block.basis.col(j).cast<Complex>();
    rotated[j] = apply_kron_power(outcome.u, t, b, k);
    weights[j] = rotated[j].dot(batch.apply(rotated[j])).real();
  }
  int j = rng.categorical(weights);

  Rank1Outcome out;
  out.x = rotated[j];
  out.lam = outcome.lam;
  out.weight = static_cast<double>(block.dim_v);
  return out;
}

BatchMeans keyl_batch_means(const CMat& rho, int t, int m, Rng& rng, const KeylConfig& config) {
  if (m < 1) throw std::invalid_argument("keyl_batch_means: m must be positive");
  int d = static_cast<int>(rho.rows());
  auto cache = SchurCache::get(d, t);
  BatchState batch = BatchState::power(rho, t);

  BatchMeans out;
  out.mean = CMat::Zero(d, d);
  for (int j = 0; j < m; ++j) {
    KeylOutcome outcome = sample_keyl_batch(batch, *cache, rng, config, &out.stats);
    out.mean += outcome.estimate;
    if (config.record_outcomes) out.records.push_back(outcome);
  }
  out.mean /= static_cast<double>(m);
  return out;
}

}  // namespace swt
