#include "swtomo/linearization.hpp"

#include <cmath>
#include <stdexcept>

#include "swtomo/density.hpp"
#include "swtomo/random_matrices.hpp"
#include "swtomo/schur_blocks.hpp"
#include "swtomo/stats.hpp"
#include "swtomo/tensor_ops.hpp"

namespace swt {

namespace {

CVec apply_real(const RMat& a, const CVec& v) {
  CVec out(a.rows());
  out.real() = a * v.real();
  out.imag() = a * v.imag();
  return out;
}

long long power_ll(int base, int exp) {
  long long p = 1;
  for (int i = 0; i < exp; ++i) p *= base;
  return p;
}

// Apply E to the modes of a fixed subset (bitmask over t), identity elsewhere.
CVec apply_on_subset(const CMat& e, const CVec& v, int t, int d, unsigned mask) {
  std::vector<int> dims(t, d);
  CVec cur = v;
  for (int m = 0; m < t; ++m)
    if (mask & (1u << m)) cur = mode_apply(e, cur, dims, m + 1);
  return cur;
}

}  // namespace

CMat linearize(const CMat& rho, int t) {
  int d = static_cast<int>(rho.rows());
  CMat eye_over_d = CMat::Identity(d, d) / static_cast<double>(d);
  CMat e = rho - eye_over_d;
  CMat out = kron_power(eye_over_d, t);
  for (int pos = 0; pos < t; ++pos) {
    std::vector<CMat> factors(t, eye_over_d);
    factors[pos] = e;
    out += kron_list(factors);
  }
  return out;
}

CVec apply_linearization_remainder(const CMat& rho, int t, const CVec& v) {
  int d = static_cast<int>(rho.rows());
  CMat e = rho - CMat::Identity(d, d) / static_cast<double>(d);
  CVec out = CVec::Zero(v.size());
  for (unsigned mask = 1; mask < (1u << t); ++mask) {
    int bits = __builtin_popcount(mask);
    if (bits < 2) continue;
    double scale = std::pow(1.0 / d, t - bits);
    out += scale * apply_on_subset(e, v, t, d, mask);
  }
  return out;
}

RotationAverageResult rotation_average_check(const CMat& e, int t, int n, Rng& rng) {
  if (t < 2) throw std::invalid_argument("rotation_average_check: t must be at least 2");
  int d = static_cast<int>(e.rows());
  long long dt = power_ll(d, t);
  CVec v = haar_vector(static_cast<int>(dt), rng);

  RunningStat stat;
  for (int i = 0; i < n; ++i) {
    CMat u = haar_unitary(d, rng);
    CMat rotated = u * e * u.adjoint();
    CVec w = apply_kron_power(rotated, t, v, d);
    stat.add(v.dot(w).real());
  }
  RotationAverageResult out;
  out.empirical_abs_mean = std::abs(stat.mean());
  out.stderr_mean = stat.stderr_mean();
  out.bound = std::pow(4.0 * t, 4.0 * t) * std::pow(e.norm(), t) / static_cast<double>(dt);
  return out;
}

Chi2Result linearization_chi2(const CMat& rho, int t, int n, Rng& rng) {
  int d = static_cast<int>(rho.rows());
  auto cache = SchurCache::get(d, t);
  CMat e = rho - CMat::Identity(d, d) / static_cast<double>(d);
  double ef = e.norm();

  Chi2Result out;
  out.bound = std::pow(100.0 * t, 4.0) * std::pow(ef, 4.0);
  out.precondition_ok = ef <= std::pow(0.01 / t, 4.0);

  // Proposal: lam ~ SW^t_d (the maximally mixed outcome law), U ~ Haar.
  long long dt = power_ll(d, t);
  RVec probs(static_cast<int>(cache->blocks().size()));
  for (std::size_t i = 0; i < cache->blocks().size(); ++i) {
    const SchurBlock& b = cache->blocks()[i];
    probs[static_cast<int>(i)] =
        static_cast<double>(b.dim_sp * b.dim_v) / static_cast<double>(dt);
  }

  double d2t = static_cast<double>(dt) * static_cast<double>(dt);
  RunningStat stat;
  for (int i = 0; i < n; ++i) {
    const SchurBlock& block = cache->blocks()[rng.categorical(probs)];
    CMat u = haar_unitary(d, rng);
    double g = 0.0;
    for (int j = 0; j < block.basis.cols(); ++j) {
      CVec b = apply_kron_power(u, t, block.basis.col(j).cast<Complex>(), d);
      g += b.dot(apply_linearization_remainder(rho, t, b)).real();
    }
    double dim_sp = static_cast<double>(block.dim_sp);
    stat.add(d2t * g * g / (dim_sp * dim_sp));
  }
  out.estimate = stat.mean();
  out.stderr_mean = stat.stderr_mean();
  return out;
}

SkewnessResult skewness_check(const CVec& v, int d, int t) {
  auto cache = SchurCache::get(d, t);
  SkewnessResult out;
  out.lhs = g_matrix(v, t, d, 1).squaredNorm();
  for (const SchurBlock& block : cache->blocks()) {
    double mass = apply_real(block.pi, v).squaredNorm();
    out.rhs += mass * static_cast<double>(sum_squares(block.lam));
  }
  return out;
}

TranscriptRecord make_keyl_transcript(const CMat& rho0, int t, int m, Rng& rng,
                                      const KeylConfig& config) {
  int d = static_cast<int>(rho0.rows());
  auto cache = SchurCache::get(d, t);
  BatchState batch = BatchState::power(rho0, t);
  TranscriptRecord rec;
  rec.state_label = "keyl";
  for (int j = 0; j < m; ++j) {
    Rank1Outcome outcome = sample_keyl_rank1(batch, *cache, rng, config);
    rec.outcomes.push_back(outcome.x);
    rec.weights.push_back(outcome.weight);
  }
  return rec;
}

WellBalancedStats well_balanced_stats(const TranscriptRecord& transcript, const CMat& rho0,
                                      int t) {
  int d = static_cast<int>(rho0.rows());
  auto cache = SchurCache::get(d, t);
  long long dt = power_ll(d, t);

  WellBalancedStats out;
  out.m = static_cast<int>(transcript.outcomes.size());
  out.t = t;
  out.d = d;

  CMat g2_sum;
  bool has_g2 = t >= 2;
  if (has_g2) g2_sum = CMat::Zero(d * d, d * d);

  for (const CVec& x : transcript.outcomes) {
    double denom = x.dot(apply_kron_power(rho0, t, x, d)).real();
    if (denom <= 0.0) throw std::domain_error("well_balanced_stats: degenerate outcome weight");
    for (const SchurBlock& block : cache->blocks()) {
      double mass = apply_real(block.pi, x).squaredNorm();
      out.a_stat += mass * static_cast<double>(sum_squares(block.lam)) /
                    (static_cast<double>(dt) * denom);
    }
    if (has_g2) g2_sum += g_matrix(x, t, d, 2) / denom;
  }

  if (has_g2) {
    double binom = static_cast<double>(t) * (t - 1) / 2.0;
    double scale = std::pow(static_cast<double>(d), -(t - 2));
    CMat b_matrix = -binom * static_cast<double>(out.m) * CMat::Identity(d * d, d * d) +
                    scale * g2_sum;
    out.b_stat = norms_of(b_matrix).op;
  }
  return out;
}

double likelihood_ratio_product(const TranscriptRecord& transcript, const CMat& rho,
                                const CMat& rho0, int t) {
  int d = static_cast<int>(rho.rows());
  double log_ratio = 0.0;
  for (const CVec& x : transcript.outcomes) {
    double num = x.dot(apply_kron_power(rho, t, x, d)).real();
    double den = x.dot(apply_kron_power(rho0, t, x, d)).real();
    if (num <= 0.0 || den <= 0.0)
      throw std::domain_error("likelihood_ratio_product: nonpositive quadratic form");
    log_ratio += std::log(num) - std::log(den);
  }
  return log_ratio;
}

}  // namespace swt
