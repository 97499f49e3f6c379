#include "swtomo/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "swtomo/density.hpp"
#include "swtomo/keyl.hpp"
#include "swtomo/linearization.hpp"
#include "swtomo/random_matrices.hpp"
#include "swtomo/rsk.hpp"
#include "swtomo/schur_blocks.hpp"
#include "swtomo/schur_poly.hpp"
#include "swtomo/splitting.hpp"
#include "swtomo/sources.hpp"
#include "swtomo/stats.hpp"
#include "swtomo/tensor_ops.hpp"
#include "swtomo/tomo.hpp"

namespace swt {

namespace {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(4);
  os << x;
  return os.str();
}

CMat random_density(int d, Rng& rng) {
  CMat g = ginibre(d, rng);
  CMat rho = g * g.adjoint();
  return rho / rho.trace().real();
}

}  // namespace

CheckResult check_schur_completeness(int d, int t, double tol) {
  Timer timer;
  CheckResult result;
  result.name = "schur-completeness d=" + std::to_string(d) + " t=" + std::to_string(t);
  auto cache = SchurCache::get(d, t);
  long long n = 1;
  for (int i = 0; i < t; ++i) n *= d;

  double worst = 0.0;
  RMat sum = RMat::Zero(n, n);
  for (const SchurBlock& block : cache->blocks()) {
    sum += block.pi;
    worst = std::max(worst, (block.pi * block.pi - block.pi).cwiseAbs().maxCoeff());
    double trace_expected = static_cast<double>(block.dim_sp * block.dim_v);
    worst = std::max(worst, std::abs(block.pi.trace() - trace_expected));
  }
  worst = std::max(worst, (sum - RMat::Identity(n, n)).cwiseAbs().maxCoeff());
  for (std::size_t a = 0; a < cache->blocks().size(); ++a)
    for (std::size_t b = a + 1; b < cache->blocks().size(); ++b)
      worst = std::max(
          worst, (cache->blocks()[a].pi * cache->blocks()[b].pi).cwiseAbs().maxCoeff());

  result.lhs = worst;
  result.rhs = tol;
  result.pass = worst <= tol;
  result.detail = "max deviation " + fmt(worst);
  result.seconds = timer.seconds();
  return result;
}

CheckResult check_born_consistency(int d, int t, int n_states, double tol, Rng rng) {
  Timer timer;
  CheckResult result;
  result.name = "born-consistency d=" + std::to_string(d) + " t=" + std::to_string(t);
  double worst = 0.0;
  for (int s = 0; s < n_states; ++s) {
    CMat rho = random_density(d, rng);
    RVec spectrum = hermitian_eigenvalues_desc(rho).cwiseMax(0.0);
    SwDistribution from_blocks = weak_schur_probs(rho, t);
    SwDistribution from_poly = sw_pmf(t, d, spectrum);
    for (const auto& [lam, q] : from_blocks.table)
      worst = std::max(worst, std::abs(q - from_poly.prob_of(lam)));
  }
  result.lhs = worst;
  result.rhs = tol;
  result.pass = worst <= tol;
  result.detail = "max |tr(Pi rho^t) - dim s_lam| = " + fmt(worst) + " over " +
                  std::to_string(n_states) + " states";
  result.seconds = timer.seconds();
  return result;
}

CheckResult check_rsk_chi_square(int t, int d, const RVec& alpha, long long n,
                                 double significance, Rng rng) {
  Timer timer;
  CheckResult result;
  result.name = "rsk-chi-square d=" + std::to_string(d) + " t=" + std::to_string(t);
  SwDistribution dist = sw_pmf(t, d, alpha);
  std::vector<long long> counts(dist.table.size(), 0);
  for (long long i = 0; i < n; ++i) {
    Partition lam = sample_sw(t, d, alpha, rng);
    for (std::size_t j = 0; j < dist.table.size(); ++j) {
      if (dist.table[j].first == lam) {
        ++counts[j];
        break;
      }
    }
  }
  std::vector<double> probs;
  for (const auto& [_, p] : dist.table) probs.push_back(p);
  Chi2Gof gof = chi_square_gof(counts, probs, n);
  result.lhs = gof.p_value;
  result.rhs = significance;
  result.pass = gof.p_value > significance;
  result.detail = "chi2 = " + fmt(gof.statistic) + ", dof = " + std::to_string(gof.dof) +
                  ", p = " + fmt(gof.p_value);
  result.seconds = timer.seconds();
  return result;
}

CheckResult check_sw_moment_bound(int t_max, int d_max) {
  Timer timer;
  CheckResult result;
  result.name = "sw-moment-bound";
  result.pass = true;
  double worst_margin = std::numeric_limits<double>::infinity();
  for (int d = 2; d <= d_max; ++d) {
    std::vector<RVec> alphas;
    alphas.push_back(RVec::Constant(d, 1.0 / d));
    RVec skew(d);
    for (int i = 0; i < d; ++i) skew[i] = static_cast<double>(d - i);
    alphas.push_back(skew / skew.sum());
    RVec peaked = RVec::Zero(d);
    peaked[0] = 0.9;
    for (int i = 1; i < d; ++i) peaked[i] = 0.1 / (d - 1);
    alphas.push_back(peaked);
    for (int t = 1; t <= t_max; ++t) {
      for (const RVec& alpha : alphas) {
        SwDistribution dist = sw_pmf(t, d, alpha);
        double mean = dist.mean_sum_squares();
        double bound = 2.0 * (alpha.squaredNorm() * t * t + std::pow(double(t), 1.5));
        worst_margin = std::min(worst_margin, bound - mean);
        if (mean > bound) result.pass = false;
      }
    }
  }
  result.lhs = worst_margin;
  result.detail = "min (bound - E[sum lam^2]) = " + fmt(worst_margin);
  result.seconds = timer.seconds();
  return result;
}

CheckResult check_sw_typical_mass(int t_max, int d_max, int n, Rng rng) {
  Timer timer;
  CheckResult result;
  result.name = "sw-typical-mass";
  result.pass = true;
  double worst = 1.0;
  for (int d = 2; d <= d_max; ++d) {
    std::vector<RVec> alphas;
    alphas.push_back(RVec::Constant(d, 1.0 / d));
    RVec skew(d);
    for (int i = 0; i < d; ++i) skew[i] = static_cast<double>(d - i);
    alphas.push_back(skew / skew.sum());
    for (int t = 1; t <= t_max; ++t) {
      double threshold = std::pow(double(t), 1.5) / 4.0;
      for (const RVec& alpha : alphas) {
        int hits = 0;
        for (int i = 0; i < n; ++i) {
          Partition lam = sample_sw(t, d, alpha, rng);
          if (static_cast<double>(sum_squares(lam)) >= threshold) ++hits;
        }
        double frac = static_cast<double>(hits) / n;
        double slack = 3.0 * std::sqrt(0.25 / n);
        worst = std::min(worst, frac);
        if (frac < 0.5 - slack) result.pass = false;
      }
    }
  }
  result.lhs = worst;
  result.rhs = 0.5;
  result.detail = "min empirical mass = " + fmt(worst);
  result.seconds = timer.seconds();
  return result;
}

CheckResult check_keyl_block_identity(int d, int t, double tol) {
  Timer timer;
  CheckResult result;
  result.name = "keyl-block-identity d=" + std::to_string(d) + " t=" + std::to_string(t);
  auto cache = SchurCache::get(d, t);
  double worst = 0.0;
  for (const SchurBlock& block : cache->blocks()) {
    RVec expected = RVec::Zero(d);
    for (int i = 0; i < block.lam.num_parts(); ++i)
      expected[i] = static_cast<double>(block.lam.parts[i]);
    for (int j = 0; j < block.basis.cols(); ++j) {
      CVec v = block.basis.col(j).cast<Complex>();
      CMat g1 = g_matrix(v, t, d, 1);
      worst = std::max(worst,
                       (g1 - CMat(expected.cast<Complex>().asDiagonal())).cwiseAbs().maxCoeff());
    }
  }
  result.lhs = worst;
  result.rhs = tol;
  result.pass = worst <= tol;
  result.detail = "max |G_1(v) - diag(lam)| = " + fmt(worst);
  result.seconds = timer.seconds();
  return result;
}

CheckResult check_povm_validity(int d, int t, int n, Rng rng) {
  Timer timer;
  CheckResult result;
  result.name = "povm-validity d=" + std::to_string(d) + " t=" + std::to_string(t);
  auto cache = SchurCache::get(d, t);
  long long dim = 1;
  for (int i = 0; i < t; ++i) dim *= d;

  CMat mean = CMat::Zero(dim, dim);
  RMat var_re = RMat::Zero(dim, dim), var_im = RMat::Zero(dim, dim);
  for (int i = 0; i < n; ++i) {
    CMat sample = CMat::Zero(dim, dim);
    CMat u = haar_unitary(d, rng);
    for (const SchurBlock& block : cache->blocks()) {
      for (int j = 0; j < block.basis.cols(); ++j) {
        CVec b = apply_kron_power(u, t, block.basis.col(j).cast<Complex>(), d);
        sample += static_cast<double>(block.dim_v) * (b * b.adjoint());
      }
    }
    mean += sample;
    var_re += sample.real().cwiseAbs2();
    var_im += sample.imag().cwiseAbs2();
  }
  mean /= static_cast<double>(n);
  double worst_ratio = 0.0;
  for (long long i = 0; i < dim; ++i) {
    for (long long j = 0; j < dim; ++j) {
      double vr = var_re(i, j) / n - mean(i, j).real() * mean(i, j).real();
      double vi = var_im(i, j) / n - mean(i, j).imag() * mean(i, j).imag();
      double se = std::sqrt(std::max(vr + vi, 0.0) / n) + 1e-9;
      double dev = std::abs(mean(i, j) - (i == j ? Complex(1.0, 0.0) : Complex(0.0, 0.0)));
      worst_ratio = std::max(worst_ratio, dev / (5.0 * se));
    }
  }
  result.lhs = worst_ratio;
  result.rhs = 1.0;
  result.pass = worst_ratio <= 1.0;
  result.detail = "max |mean - I| / (5 stderr) = " + fmt(worst_ratio);
  result.seconds = timer.seconds();
  return result;
}

CheckResult check_estimator_mean(int d, int t, double e_scale, int m, Rng rng) {
  Timer timer;
  CheckResult result;
  result.name = "estimator-mean d=" + std::to_string(d) + " t=" + std::to_string(t);

  CMat e = CMat::Zero(d, d);
  e(0, 0) = e_scale;
  e(1, 1) = -e_scale;
  CMat rho = CMat::Identity(d, d) / static_cast<double>(d) + e;
  ExactSource source(rho);

  KeylConfig config;
  config.record_outcomes = true;
  BalancedEstimate est = learn_balanced(source, t, m, rng, config);

  double scale = est.t * (static_cast<double>(d) * d - 1.0) / (d * est.theta_used);
  CMat eye_over_d = CMat::Identity(d, d) / static_cast<double>(d);
  RMat var_re = RMat::Zero(d, d), var_im = RMat::Zero(d, d);
  for (const CMat& record : est.records) {
    CMat sample = scale * (record - eye_over_d);
    CMat centered = sample - est.e_hat;
    var_re += centered.real().cwiseAbs2();
    var_im += centered.imag().cwiseAbs2();
  }
  double var_sum = (var_re.sum() + var_im.sum()) / std::max(1, m - 1);
  double se_frob = std::sqrt(var_sum / m);

  double err = (est.e_hat - e).norm();
  double bias_allowance = 10.0 * std::pow(double(t), 3.0) * e.squaredNorm() / est.theta_used;
  double tolerance = std::max(5.0 * se_frob, bias_allowance);
  result.lhs = err;
  result.rhs = tolerance;
  result.pass = err <= tolerance;
  result.detail = "||mean - E||_F = " + fmt(err) + " vs " + fmt(tolerance);
  result.stderr_mean = se_frob;
  result.seconds = timer.seconds();
  return result;
}

CheckResult check_variance_theta(int d, int t, int m, Rng rng) {
  Timer timer;
  CheckResult result;
  result.name = "variance-theta d=" + std::to_string(d) + " t=" + std::to_string(t);

  CMat rho = CMat::Identity(d, d) / static_cast<double>(d);
  auto cache = SchurCache::get(d, t);
  BatchState batch = BatchState::power(rho, t);
  CMat eye_over_d = rho;

  RunningStat stat;
  KeylConfig config;
  for (int j = 0; j < m; ++j) {
    KeylOutcome outcome = sample_keyl_batch(batch, *cache, rng, config, nullptr);
    stat.add((outcome.estimate - eye_over_d).squaredNorm());
  }
  // E_SW[sum lam^2]/t^2 - 1/d reduces to theta/t^2.
  double expected = theta(t, d) / (static_cast<double>(t) * t);
  double dev = std::abs(stat.mean() - expected);
  result.lhs = dev;
  result.rhs = 5.0 * stat.stderr_mean();
  result.pass = dev <= result.rhs;
  result.stderr_mean = stat.stderr_mean();
  result.detail = "empirical " + fmt(stat.mean()) + " vs exact " + fmt(expected);
  result.seconds = timer.seconds();
  return result;
}

CheckResult check_t_benefit(int d, const std::vector<int>& ts, double e_frobenius, int m,
                            int reps, Rng rng) {
  Timer timer;
  CheckResult result;
  result.name = "t-benefit d=" + std::to_string(d);

  CMat e = CMat::Zero(d, d);
  for (int i = 0; i < d; ++i) e(i, i) = (i < d / 2 ? 1.0 : -1.0);
  if (d % 2 == 1) e(d - 1, d - 1) = 0.0;
  e *= e_frobenius / e.norm();
  CMat rho = CMat::Identity(d, d) / static_cast<double>(d) + e;

  std::vector<double> mse_mean, mse_se;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    RunningStat stat;
    Rng stream = rng.substream(i);
    for (int r = 0; r < reps; ++r) {
      Rng rep_stream = stream.substream(r);
      ExactSource source(rho);
      BalancedEstimate est = learn_balanced(source, ts[i], m, rep_stream);
      stat.add((est.e_hat - e).squaredNorm());
    }
    mse_mean.push_back(stat.mean());
    mse_se.push_back(stat.stderr_mean());
  }

  result.pass = true;
  std::ostringstream os;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    os << "t=" << ts[i] << ": " << fmt(mse_mean[i]) << " ";
    if (i > 0) {
      double slack = 2.0 * std::sqrt(mse_se[i] * mse_se[i] + mse_se[i - 1] * mse_se[i - 1]);
      if (mse_mean[i] > mse_mean[i - 1] + slack) result.pass = false;
    }
  }
  result.detail = os.str();
  result.seconds = timer.seconds();
  return result;
}

CheckResult check_split_identity(int n_cases, double tol, Rng rng) {
  Timer timer;
  CheckResult result;
  result.name = "split-identity";
  result.pass = true;
  double worst = 0.0;
  for (int c = 0; c < n_cases; ++c) {
    int d = 2 + rng.uniform_int(3);
    std::vector<int> b(d);
    for (int j = 0; j < d; ++j) b[j] = rng.uniform_int(3);
    SplitSpec spec = SplitSpec::from_exponents(b);
    CMat m = ginibre(d, rng);
    CMat round_trip = rec(split(m, spec), spec);
    worst = std::max(worst, (round_trip - m).cwiseAbs().maxCoeff());
    // Norm contraction and density preservation on a random state.
    CMat rho = random_density(d, rng);
    CMat s = split(rho, spec);
    if (split(m, spec).norm() > m.norm() + tol) result.pass = false;
    if (!is_density(s, 1e-9)) result.pass = false;
    // Eigenvalue control for the derived spec.
    RVec eigs = hermitian_eigenvalues_desc(rho).cwiseMax(0.0);
    SplitSpec derived = SplitSpec::from_eigenvalues(eigs, d);
    CMat diag_split = split(CMat(eigs.cast<Complex>().asDiagonal()), derived);
    if (norms_of(diag_split).op > 1.0 / d + 1e-12) result.pass = false;
    if (derived.k > 4 * d) result.pass = false;
  }
  if (worst > tol) result.pass = false;
  result.lhs = worst;
  result.rhs = tol;
  result.detail = "max |rec(split(M)) - M| = " + fmt(worst);
  result.seconds = timer.seconds();
  return result;
}

CheckResult check_split_measurement(int d, int t, long long n, double significance, Rng rng) {
  Timer timer;
  CheckResult result;
  result.name = "split-measurement d=" + std::to_string(d) + " t=" + std::to_string(t);

  CMat rho = CMat::Zero(d, d);
  rho(0, 0) = 0.75;
  rho(1, 1) = 0.25;
  RVec eigs = hermitian_eigenvalues_desc(rho);
  SplitSpec spec = SplitSpec::from_eigenvalues(eigs, d);

  long long kt = 1;
  for (int i = 0; i < t; ++i) kt *= spec.k;
  Rank1Povm povm = random_rank1_povm(static_cast<int>(kt), 2, rng);

  CMat split_power = kron_power(split(rho, spec), t);
  RVec exact(povm.size());
  for (int z = 0; z < povm.size(); ++z)
    exact[z] = povm.weights[z] *
               (povm.vectors[z].adjoint() * split_power * povm.vectors[z])(0, 0).real();

  std::vector<long long> counts(povm.size(), 0);
  for (long long i = 0; i < n; ++i)
    ++counts[simulate_split_measurement(rho, t, povm, spec, rng)];

  std::vector<double> probs(exact.data(), exact.data() + exact.size());
  Chi2Gof gof = chi_square_gof(counts, probs, n);
  result.lhs = gof.p_value;
  result.rhs = significance;
  result.pass = gof.p_value > significance;
  result.detail = "chi2 = " + fmt(gof.statistic) + ", p = " + fmt(gof.p_value);
  result.seconds = timer.seconds();
  return result;
}

CheckResult check_mixture_simulation(int d, int t, int n_povms, long long n, double significance,
                                     Rng rng) {
  Timer timer;
  CheckResult result;
  result.name = "mixture-simulation d=" + std::to_string(d) + " t=" + std::to_string(t);
  result.pass = true;

  CMat rho = random_density(d, rng);
  CMat sigma = random_density(d, rng);
  double lam = 0.5;
  CMat mixture = lam * rho + (1.0 - lam) * sigma;
  CMat mixture_power = kron_power(mixture, t);

  double min_p = 1.0;
  long long dt = 1;
  for (int i = 0; i < t; ++i) dt *= d;
  for (int pv = 0; pv < n_povms; ++pv) {
    Rank1Povm povm = random_rank1_povm(static_cast<int>(dt), 2, rng);
    RVec exact(povm.size());
    for (int z = 0; z < povm.size(); ++z)
      exact[z] = povm.weights[z] *
                 (povm.vectors[z].adjoint() * mixture_power * povm.vectors[z])(0, 0).real();

    ExactSource base(rho);
    MixtureSource source(base, sigma, lam);
    std::vector<long long> counts(povm.size(), 0);
    for (long long i = 0; i < n; ++i) {
      Batch batch = source.make_batch(t, rng);
      ++counts[measure_rank1(batch, povm, rng)];
    }
    std::vector<double> probs(exact.data(), exact.data() + exact.size());
    Chi2Gof gof = chi_square_gof(counts, probs, n);
    min_p = std::min(min_p, gof.p_value);
    if (gof.p_value <= significance) result.pass = false;
  }
  result.lhs = min_p;
  result.rhs = significance;
  result.detail = "min p over " + std::to_string(n_povms) + " POVMs = " + fmt(min_p);
  result.seconds = timer.seconds();
  return result;
}

CheckResult check_skewness_random(int d, int t, int n_vectors, Rng rng) {
  Timer timer;
  CheckResult result;
  result.name = "skewness d=" + std::to_string(d) + " t=" + std::to_string(t);
  result.pass = true;
  long long dt = 1;
  for (int i = 0; i < t; ++i) dt *= d;
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_vectors; ++i) {
    CVec v = haar_vector(static_cast<int>(dt), rng);
    SkewnessResult sk = skewness_check(v, d, t);
    worst = std::max(worst, sk.lhs - sk.rhs);
    if (sk.lhs > sk.rhs + 1e-8) result.pass = false;
  }
  result.lhs = worst;
  result.rhs = 1e-8;
  result.detail = "max (lhs - rhs) = " + fmt(worst);
  result.seconds = timer.seconds();
  return result;
}

CheckResult check_rotation_average(int d, int t, const CMat& e, int n, Rng rng) {
  Timer timer;
  CheckResult result;
  result.name = "rotation-average d=" + std::to_string(d) + " t=" + std::to_string(t);
  RotationAverageResult ra = rotation_average_check(e, t, n, rng);
  result.lhs = ra.empirical_abs_mean;
  result.rhs = ra.bound;
  result.stderr_mean = ra.stderr_mean;
  result.pass = ra.empirical_abs_mean <= ra.bound + 5.0 * ra.stderr_mean;
  result.detail = "empirical " + fmt(ra.empirical_abs_mean) + " vs bound " + fmt(ra.bound);
  result.seconds = timer.seconds();
  return result;
}

CheckResult check_linearization_bound(int d, int t, double e_frobenius, int n, Rng rng) {
  Timer timer;
  CheckResult result;
  result.name = "linearization-chi2 d=" + std::to_string(d) + " t=" + std::to_string(t) +
                " |E|=" + fmt(e_frobenius);
  CMat e = CMat::Zero(d, d);
  for (int i = 0; i < d; ++i) e(i, i) = (i % 2 == 0 ? 1.0 : -1.0);
  if (d % 2 == 1) e(d - 1, d - 1) = 0.0;
  e *= e_frobenius / e.norm();
  CMat rho = CMat::Identity(d, d) / static_cast<double>(d) + e;

  Chi2Result chi = linearization_chi2(rho, t, n, rng);
  result.lhs = chi.estimate;
  result.rhs = chi.bound;
  result.stderr_mean = chi.stderr_mean;
  result.pass = chi.estimate <= chi.bound + 5.0 * chi.stderr_mean;
  result.detail = "estimate " + fmt(chi.estimate) + " vs bound " + fmt(chi.bound) +
                  (chi.precondition_ok ? "" : " (outside stated range)");
  result.seconds = timer.seconds();
  return result;
}

CheckResult check_full_learn_hard(int d, int t, double gue_sigma, int n_instances,
                                  const std::vector<long long>& budgets, double median_threshold,
                                  Rng rng, HardRunSummary* summary) {
  Timer timer;
  CheckResult result;
  result.name = "full-learn-hard d=" + std::to_string(d) + " t=" + std::to_string(t);

  std::vector<RunningStat> per_budget(budgets.size());
  std::vector<double> top_errors;
  std::vector<long long> top_copies;
  for (int inst = 0; inst < n_instances; ++inst) {
    Rng stream = rng.substream(inst);
    HardInstance hard = sample_hard_instance(d, gue_sigma, stream);
    for (std::size_t bi = 0; bi < budgets.size(); ++bi) {
      Rng run_stream = stream.substream(bi + 1);
      ExactSource source(hard.state);
      FullLearnConfig config;
      config.n_baseline = budgets[bi];
      config.refined = refined_budget(d, t, 0.1, 0.25);
      FullLearnResult run = full_learn(source, t, config, run_stream);
      double err = trace_distance(run.rho_hat, hard.state);
      per_budget[bi].add(err);
      if (bi + 1 == budgets.size()) {
        top_errors.push_back(err);
        top_copies.push_back(run.budget.total());
      }
    }
  }

  std::vector<double> sorted = top_errors;
  std::sort(sorted.begin(), sorted.end());
  double median = sorted[sorted.size() / 2];
  std::vector<long long> copies_sorted = top_copies;
  std::sort(copies_sorted.begin(), copies_sorted.end());

  bool monotone = true;
  for (std::size_t bi = 1; bi < budgets.size(); ++bi) {
    double slack = std::sqrt(per_budget[bi].stderr_mean() * per_budget[bi].stderr_mean() +
                             per_budget[bi - 1].stderr_mean() * per_budget[bi - 1].stderr_mean());
    if (per_budget[bi].mean() > per_budget[bi - 1].mean() + slack) monotone = false;
  }

  result.lhs = median;
  result.rhs = median_threshold;
  result.pass = median <= median_threshold && monotone;
  std::ostringstream os;
  os << "median trace distance " << fmt(median) << " (threshold " << fmt(median_threshold)
     << "), curve";
  for (std::size_t bi = 0; bi < budgets.size(); ++bi) os << " " << fmt(per_budget[bi].mean());
  os << (monotone ? " monotone" : " NOT monotone");
  os << ", median copies " << copies_sorted[copies_sorted.size() / 2];
  result.detail = os.str();
  result.seconds = timer.seconds();

  if (summary) {
    summary->budgets = budgets;
    for (auto& s : per_budget) {
      summary->mean_error.push_back(s.mean());
      summary->stderr_error.push_back(s.stderr_mean());
    }
    summary->median_top = median;
    summary->median_copies_top = copies_sorted[copies_sorted.size() / 2];
  }
  return result;
}

}  // namespace swt
