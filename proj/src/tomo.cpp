#include "swtomo/tomo.hpp"

#include <cmath>
#include <stdexcept>

#include "swtomo/density.hpp"
#include "swtomo/random_matrices.hpp"
#include "swtomo/schur_poly.hpp"
#include "swtomo/splitting.hpp"
#include "swtomo/tensor_ops.hpp"

namespace swt {

void CopyBudget::add(std::string stage, long long n) {
  per_stage.emplace_back(std::move(stage), n);
}

long long CopyBudget::total() const {
  long long t = 0;
  for (const auto& [_, n] : per_stage) t += n;
  return t;
}

namespace {

int effective_batch_size(int t, int d) {
  if (t > d * d) throw std::invalid_argument("learn_balanced: requires t <= d^2");
  int cap = static_cast<int>(0.01 * d * d);
  if (cap >= 1 && t >= 0.01 * d * d) return cap;
  return t;
}

}  // namespace

BalancedEstimate learn_balanced(StateSource& source, int t, int m, Rng& rng,
                                const KeylConfig& config) {
  if (m < 1) throw std::invalid_argument("learn_balanced: m must be positive");
  int d = source.dim();
  int t_eff = effective_batch_size(t, d);
  auto cache = SchurCache::get(d, t_eff);

  BalancedEstimate est;
  est.t = t_eff;
  est.m = m;
  est.theta_used = theta(t_eff, d);

  CMat mean = CMat::Zero(d, d);
  for (int j = 0; j < m; ++j) {
    Batch batch = source.make_batch(t_eff, rng);
    KeylOutcome outcome = sample_keyl_batch(batch.state(), *cache, rng, config, &est.stats);
    mean += outcome.estimate;
    if (config.record_outcomes) est.records.push_back(outcome.estimate);
  }
  mean /= static_cast<double>(m);

  double scale = t_eff * (static_cast<double>(d) * d - 1.0) / (d * est.theta_used);
  est.e_hat = scale * (mean - CMat::Identity(d, d) / static_cast<double>(d));
  return est;
}

RefinedConfig refined_budget(int d, int t, double eps, double delta, double scale) {
  RefinedConfig cfg;
  double dd = static_cast<double>(d) * d;
  cfg.n_baseline = static_cast<long long>(std::ceil(scale * dd / (std::sqrt(double(t)) * eps * eps)));
  cfg.m_batches = static_cast<int>(std::ceil(scale * dd / (std::pow(double(t), 1.5) * eps * eps)));
  cfg.repeats = std::max(1, static_cast<int>(std::ceil(std::log(1.0 / delta))));
  return cfg;
}

CMat unentangled_baseline_raw(StateSource& source, long long n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("unentangled_baseline: n must be positive");
  int d = source.dim();
  CMat sum = CMat::Zero(d, d);
  CMat eye = CMat::Identity(d, d);
  for (long long i = 0; i < n; ++i) {
    Batch b = source.make_batch(1, rng);
    CMat basis = haar_unitary(d, rng);
    RVec probs(d);
    for (int j = 0; j < d; ++j) {
      CVec v = basis.col(j);
      probs[j] = (v.adjoint() * b.factors[0] * v)(0, 0).real();
    }
    int j = rng.categorical(probs);
    CVec v = basis.col(j);
    sum += (d + 1.0) * (v * v.adjoint()) - eye;
  }
  return sum / static_cast<double>(n);
}

CMat unentangled_baseline(StateSource& source, long long n, Rng& rng) {
  return project_density(unentangled_baseline_raw(source, n, rng));
}

CMat geometric_median(std::span<const CMat> points) {
  if (points.empty()) throw std::invalid_argument("geometric_median: empty input");
  if (points.size() == 1) return points[0];
  CMat x = points[0];
  for (std::size_t i = 1; i < points.size(); ++i) x += points[i];
  x /= static_cast<double>(points.size());

  for (int iter = 0; iter < 500; ++iter) {
    CMat num = CMat::Zero(x.rows(), x.cols());
    double den = 0.0;
    for (const CMat& p : points) {
      double dist = (x - p).norm();
      double w = 1.0 / std::max(dist, 1e-12);
      num += w * p;
      den += w;
    }
    CMat next = num / den;
    double step = (next - x).norm();
    x = next;
    if (step < 1e-9) break;
  }
  return x;
}

CMat learn_balanced_refined(StateSource& source, int t, const RefinedConfig& config, Rng& rng,
                            CopyBudget* budget) {
  int d = source.dim();
  CMat eye = CMat::Identity(d, d);
  std::vector<CMat> candidates;
  for (int r = 0; r < config.repeats; ++r) {
    long long before = source.copies_consumed();
    CMat crude = unentangled_baseline(source, config.n_baseline, rng);
    if (budget) budget->add("refined_baseline", source.copies_consumed() - before);

    CMat bounded = project_density(crude, 4.0 / d);
    CMat complement = (4.0 / (3.0 * d)) * eye - bounded / 3.0;

    before = source.copies_consumed();
    MixtureSource mix(source, complement, 0.25);
    BalancedEstimate est = learn_balanced(mix, t, config.m_batches, rng, config.keyl);
    if (budget) budget->add("refined_keyl", source.copies_consumed() - before);

    candidates.push_back(project_density(bounded + 4.0 * est.e_hat));
  }
  return project_density(geometric_median(candidates));
}

CMat learn_bounded(StateSource& source, const CMat& rho_prime, int t, const RefinedConfig& config,
                   Rng& rng, CopyBudget* budget) {
  int d = source.dim();
  if (rho_prime.rows() != d) throw std::invalid_argument("learn_bounded: dim mismatch");
  auto [vals, vecs] = hermitian_eig_desc(rho_prime);
  for (int i = 0; i < vals.size(); ++i) vals[i] = std::max(0.0, vals[i]);
  SplitSpec spec = SplitSpec::from_eigenvalues(vals, d);

  RotatedSource rotated(source, vecs);
  SplitSource split_source(rotated, spec);
  CMat sigma_hat = learn_balanced_refined(split_source, t, config, rng, budget);
  CMat back = rec(sigma_hat, spec);
  return project_density(vecs * back * vecs.adjoint());
}

ProjectorResult learn_projector(StateSource& source, const CMat& rho_prime, const CMat& p, int t,
                                long long n_beta, const RefinedConfig& config, Rng& rng,
                                CopyBudget* budget) {
  int d = source.dim();
  ProjectorResult result;

  long long before = source.copies_consumed();
  long long hits = 0;
  for (long long i = 0; i < n_beta; ++i) {
    Batch b = source.make_batch(1, rng);
    if (measure_two_outcome(b.factors[0], p, rng)) ++hits;
  }
  if (budget) budget->add("projector_beta", source.copies_consumed() - before);
  result.beta_hat = static_cast<double>(hits) / static_cast<double>(n_beta);
  if (result.beta_hat < 0.09) {
    result.precondition_ok = false;
    result.estimate = CMat::Zero(d, d);
    return result;
  }

  int t_prime = std::max(1, static_cast<int>(std::floor(t * result.beta_hat / 2.0)));

  CMat prp = p * rho_prime * p;
  double mass = prp.trace().real();
  if (mass < 1e-9) {
    result.precondition_ok = false;
    result.estimate = CMat::Zero(d, d);
    return result;
  }
  CMat conditioned_prior = prp / mass;

  before = source.copies_consumed();
  ConditionedSource conditioned(source, p, t);
  CMat learned = learn_bounded(conditioned, conditioned_prior, t_prime, config, rng, nullptr);
  if (budget) budget->add("projector_filtered", source.copies_consumed() - before);

  result.estimate = result.beta_hat * (p * learned * p);
  return result;
}

FullLearnResult full_learn(StateSource& source, int t, const FullLearnConfig& config, Rng& rng) {
  int d = source.dim();
  FullLearnResult result;
  double bound = std::min(static_cast<double>(d) * d,
                          std::pow(std::sqrt(static_cast<double>(d)) / config.eps, 0.2));
  if (t > config.t_bound_slack * bound || t > d * d)
    throw std::invalid_argument("full_learn: t exceeds the allowed range");
  result.t_bound_warning = t > bound;

  CMat eye = CMat::Identity(d, d);
  MixtureSource sigma_source(source, eye / static_cast<double>(d), 0.5);

  long long before = source.copies_consumed();
  CMat sigma0 = unentangled_baseline(sigma_source, config.n_baseline, rng);
  result.budget.add("baseline", source.copies_consumed() - before);
  result.ladder.base_estimate = sigma0;

  auto [vals, vecs] = hermitian_eig_desc(sigma0);
  result.ladder.unitary = vecs;

  int levels = static_cast<int>(std::floor(std::log2(std::sqrt(static_cast<double>(t)))));
  std::vector<CMat> projectors;  // P_1..P_L
  std::vector<CMat> estimates;   // sigma_hat_1..L
  for (int j = 1; j <= levels; ++j) {
    double threshold = std::sqrt(static_cast<double>(t)) / (std::pow(2.0, j - 1) * d);
    RVec mask = (vals.array() <= threshold).cast<double>();
    CMat pj = vecs * mask.asDiagonal() * vecs.adjoint();

    ProjectorLadder::Level level;
    level.j = j;
    level.threshold = threshold;
    level.p = pj;
    try {
      ProjectorResult pr =
          learn_projector(sigma_source, sigma0, pj, t, config.n_beta, config.refined, rng,
                          &result.budget);
      if (pr.precondition_ok) {
        level.estimate = pr.estimate;
      } else {
        level.estimate = pj * sigma0 * pj;
        level.degraded = true;
        result.degraded = true;
      }
    } catch (const SamplerBudgetError&) {
      level.estimate = pj * sigma0 * pj;
      level.degraded = true;
      result.degraded = true;
    }
    projectors.push_back(pj);
    estimates.push_back(level.estimate);
    result.ladder.levels.push_back(level);
  }

  // sigma_hat = sum_j (P_j s_j P_j - P_{j+1} s_j P_{j+1}), P_0 = I, P_{L+1} = 0.
  CMat sigma_hat = CMat::Zero(d, d);
  for (int j = 0; j <= levels; ++j) {
    const CMat& est = j == 0 ? sigma0 : estimates[j - 1];
    CMat pj = j == 0 ? eye : projectors[j - 1];
    CMat pj1 = j == levels ? CMat(CMat::Zero(d, d)) : projectors[j];
    sigma_hat += pj * est * pj - pj1 * est * pj1;
  }

  CMat raw = 2.0 * sigma_hat - eye / static_cast<double>(d);
  auto [rvals, rvecs] = hermitian_eig_desc(raw);
  RVec truncated = rvals.cwiseMax(0.0);
  double mass = truncated.sum();
  if (mass <= 1e-12) {
    result.degraded = true;
    result.rho_hat = eye / static_cast<double>(d);
    return result;
  }
  truncated /= mass;
  result.rho_hat = rvecs * truncated.asDiagonal() * rvecs.adjoint();
  return result;
}

}  // namespace swt
