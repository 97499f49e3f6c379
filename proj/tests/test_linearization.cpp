#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "swtomo/density.hpp"
#include "swtomo/linearization.hpp"
#include "swtomo/random_matrices.hpp"
#include "swtomo/rng.hpp"
#include "swtomo/schur_poly.hpp"
#include "swtomo/stats.hpp"
#include "swtomo/tensor_ops.hpp"

using namespace swt;

TEST_CASE("linearize basic identities") {
  int d = 2;
  CMat mixed = CMat::Identity(d, d) / static_cast<double>(d);
  CMat x = linearize(mixed, 3);
  CHECK((x - kron_power(mixed, 3)).cwiseAbs().maxCoeff() <= 1e-14);

  Rng rng(901);
  CMat g = ginibre(d, rng);
  CMat rho = g * g.adjoint();
  rho /= rho.trace().real();
  CHECK((linearize(rho, 1) - rho).cwiseAbs().maxCoeff() <= 1e-14);

  // t = 2 hand expansion.
  CMat e = rho - mixed;
  CMat expected = kron(mixed, mixed) + kron(e, mixed) + kron(mixed, e);
  CHECK((linearize(rho, 2) - expected).cwiseAbs().maxCoeff() <= 1e-13);

  CMat lin = linearize(rho, 3);
  CHECK(std::abs(lin.trace().real() - 1.0) <= 1e-12);
  CHECK(is_hermitian(lin, 1e-12));
}

TEST_CASE("linearization remainder equals the dense difference") {
  Rng rng(907);
  int d = 2, t = 3;
  CMat g = ginibre(d, rng);
  CMat rho = g * g.adjoint();
  rho /= rho.trace().real();
  CMat dense_remainder = kron_power(rho, t) - linearize(rho, t);
  CVec v(8);
  for (int i = 0; i < 8; ++i) v[i] = Complex(rng.normal(), rng.normal());
  CVec got = apply_linearization_remainder(rho, t, v);
  CHECK((got - dense_remainder * v).norm() <= 1e-12 * dense_remainder.norm() * v.norm() + 1e-13);
}

TEST_CASE("rotation average bound") {
  Rng rng(911);
  // E = 0.
  CMat zero = CMat::Zero(2, 2);
  RotationAverageResult rz = rotation_average_check(zero, 2, 200, rng);
  CHECK(rz.empirical_abs_mean <= rz.bound + 5.0 * rz.stderr_mean);

  // t even, E = diag(1,-1)/sqrt(2).
  CMat e(2, 2);
  e << 1.0 / std::sqrt(2.0), 0.0, 0.0, -1.0 / std::sqrt(2.0);
  RotationAverageResult r2 = rotation_average_check(e, 2, 10000, rng);
  CHECK(r2.empirical_abs_mean > 0.0);
  CHECK(r2.empirical_abs_mean <= r2.bound + 5.0 * r2.stderr_mean);

  // t = 3, random traceless E at d = 3.
  CMat g = ginibre(3, rng);
  CMat herm = (g + g.adjoint()) / 2.0;
  herm -= (herm.trace() / 3.0) * CMat::Identity(3, 3);
  RotationAverageResult r3 = rotation_average_check(herm, 3, 10000, rng);
  CHECK(r3.empirical_abs_mean <= r3.bound + 5.0 * r3.stderr_mean);

  CHECK_THROWS_AS(rotation_average_check(e, 1, 10, rng), std::invalid_argument);
}

TEST_CASE("linearization chi-square statistic") {
  Rng rng(919);
  int d = 2;

  // Exact zero at the maximally mixed state.
  CMat mixed = CMat::Identity(d, d) / static_cast<double>(d);
  Chi2Result rz = linearization_chi2(mixed, 2, 500, rng);
  CHECK(rz.estimate <= 1e-24);

  // Quartic scaling: ||E|| = 1e-9 pushes the statistic below 1e-20.
  CMat e = CMat::Zero(d, d);
  e(0, 0) = 1e-9 / std::sqrt(2.0);
  e(1, 1) = -1e-9 / std::sqrt(2.0);
  Chi2Result tiny = linearization_chi2(mixed + e, 2, 2000, rng);
  CHECK(tiny.estimate <= 1e-20);

  // The stated validity range is ||E||_F <= (0.01/t)^4.
  Chi2Result inside = linearization_chi2(mixed + 0.5e-9 * (e / e.norm()), 2, 100, rng);
  CHECK(inside.precondition_ok);

  // Moderate deviation at t = 3: bound still holds with margin.
  CMat e3 = CMat::Zero(d, d);
  e3(0, 0) = 1e-3 / std::sqrt(2.0);
  e3(1, 1) = -1e-3 / std::sqrt(2.0);
  Chi2Result moderate = linearization_chi2(mixed + e3, 3, 10000, rng);
  CHECK_FALSE(moderate.precondition_ok);  // outside the stated range, still reported
  CHECK(moderate.estimate <= moderate.bound + 5.0 * moderate.stderr_mean);
}

TEST_CASE("skewness inequality structured cases") {
  int d = 2, t = 3;
  // v = e_1^{(x) t}: equality at t^2.
  CVec top = CVec::Zero(8);
  top[0] = 1.0;
  SkewnessResult s1 = skewness_check(top, d, t);
  CHECK(s1.lhs == doctest::Approx(9.0).epsilon(1e-10));
  CHECK(s1.rhs == doctest::Approx(9.0).epsilon(1e-8));

  // Singlet at t = 2: both sides equal 2.
  CVec singlet = CVec::Zero(4);
  singlet[1] = 1.0 / std::sqrt(2.0);
  singlet[2] = -1.0 / std::sqrt(2.0);
  SkewnessResult s2 = skewness_check(singlet, 2, 2);
  CHECK(s2.lhs == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(s2.rhs == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("skewness inequality on random vectors") {
  Rng rng(929);
  int d = 3, t = 4;
  for (int i = 0; i < 300; ++i) {
    CVec v = haar_vector(81, rng);
    SkewnessResult s = skewness_check(v, d, t);
    CHECK(s.lhs <= s.rhs + 1e-8);
  }
}

TEST_CASE("well-balanced statistics: empty and Keyl transcripts") {
  int d = 2, t = 2;
  CMat rho0 = CMat::Identity(d, d) / static_cast<double>(d);
  TranscriptRecord empty;
  WellBalancedStats none = well_balanced_stats(empty, rho0, t);
  CHECK(none.a_stat == 0.0);
  CHECK(none.b_stat == 0.0);

  Rng rng(937);
  int m = 2000;
  TranscriptRecord transcript = make_keyl_transcript(rho0, t, m, rng);
  WellBalancedStats stats = well_balanced_stats(transcript, rho0, t);

  // Per-step A mass concentrates at E_SW[sum lam^2] = 3.5 for (t, d) = (2, 2).
  double expected = sw_pmf(t, d, RVec::Constant(d, 0.5)).mean_sum_squares();
  CHECK(expected == doctest::Approx(3.5));
  // Per-outcome values are bounded by t^2, so 5 stderr <= 5 t^2 / sqrt(m).
  double se_bound = 5.0 * t * t / std::sqrt(static_cast<double>(m));
  CHECK(std::abs(stats.a_stat / m - expected) <= se_bound);
  CHECK(stats.b_stat >= 0.0);
}

TEST_CASE("b statistic grows at most like sqrt(m) with the stated scale") {
  int d = 2, t = 2;
  CMat rho0 = CMat::Identity(d, d) / static_cast<double>(d);
  double eps = 0.05;
  std::vector<int> ms = {250, 1000, 4000};
  for (int m : ms) {
    Rng rng(941 + m);
    TranscriptRecord transcript = make_keyl_transcript(rho0, t, m, rng);
    WellBalancedStats stats = well_balanced_stats(transcript, rho0, t);
    double threshold = 10.0 * t * t * d * std::sqrt(static_cast<double>(m)) *
                       std::log(d / eps);
    CHECK(stats.b_stat <= threshold);
  }
}

TEST_CASE("likelihood ratio products") {
  Rng rng(947);
  int d = 2, t = 2;
  CMat rho0 = CMat::Zero(d, d);
  rho0(0, 0) = 0.55;
  rho0(1, 1) = 0.45;
  CMat rho1 = CMat::Zero(d, d);
  rho1(0, 0) = 0.6;
  rho1(1, 1) = 0.4;

  TranscriptRecord transcript = make_keyl_transcript(rho0, t, 50, rng);
  CHECK(likelihood_ratio_product(transcript, rho0, rho0, t) == 0.0);

  // Antisymmetry under swapping the hypotheses.
  double fwd = likelihood_ratio_product(transcript, rho1, rho0, t);
  double bwd = likelihood_ratio_product(transcript, rho0, rho1, t);
  CHECK(fwd == doctest::Approx(-bwd).epsilon(1e-12));

  // Product state outcome: t log(rho_11 / rho0_11).
  TranscriptRecord single;
  CVec x = CVec::Zero(4);
  x[0] = 1.0;  // e_1 (x) e_1
  single.outcomes.push_back(x);
  single.weights.push_back(1.0);
  double expected = t * std::log(0.6 / 0.55);
  CHECK(likelihood_ratio_product(single, rho1, rho0, t) == doctest::Approx(expected));
}

TEST_CASE("average likelihood ratio instantiation of the lower-bound inequality") {
  Rng rng(953);
  int d = 2, t = 2, m = 400;
  double eps = 0.05;
  CMat rho0 = CMat::Identity(d, d) / static_cast<double>(d);
  TranscriptRecord transcript = make_keyl_transcript(rho0, t, m, rng);
  WellBalancedStats stats = well_balanced_stats(transcript, rho0, t);

  // Haar-rotated alternatives at operator norm eps/d.
  CMat delta0 = CMat::Zero(d, d);
  delta0(0, 0) = eps / d;
  delta0(1, 1) = -eps / d;
  RunningStat log_ratios;
  double max_log = -1e300;
  std::vector<double> logs;
  for (int i = 0; i < 200; ++i) {
    CMat u = haar_unitary(d, rng);
    CMat rho = rho0 + u * delta0 * u.adjoint();
    logs.push_back(likelihood_ratio_product(transcript, rho, rho0, t));
    max_log = std::max(max_log, logs.back());
  }
  // log of the empirical mean of products via log-sum-exp.
  double acc = 0.0;
  for (double l : logs) acc += std::exp(l - max_log);
  double log_mean = max_log + std::log(acc / logs.size());

  double rhs = -(2.0 * eps * eps * stats.a_stat + 1e8 * eps * eps * stats.b_stat) / d -
               30.0 * m * t * t * t * eps * eps * eps / d;
  CHECK(log_mean >= rhs);
}
