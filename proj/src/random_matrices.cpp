#include "swtomo/random_matrices.hpp"

#include <cmath>
#include <stdexcept>

#include "swtomo/density.hpp"
#include "swtomo/stats.hpp"

namespace swt {

CMat ginibre(int d, Rng& rng) {
  CMat m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = Complex(rng.normal(), rng.normal());
  return m;
}

CMat haar_unitary(int d, Rng& rng) {
  if (d < 1) throw std::invalid_argument("haar_unitary: d must be positive");
  CMat g = ginibre(d, rng);
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ();
  CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    Complex rjj = r(j, j);
    double a = std::abs(rjj);
    Complex phase = a > 0.0 ? rjj / a : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

CVec haar_vector(int d, Rng& rng) {
  CVec v(d);
  for (int i = 0; i < d; ++i) v[i] = Complex(rng.normal(), rng.normal());
  v /= v.norm();
  return v;
}

CMat gue(int d, Rng& rng) {
  if (d < 2) throw std::invalid_argument("gue: d must be at least 2");
  CMat g = CMat::Zero(d, d);
  double diag_sd = std::sqrt(2.0 / d);
  double off_sd = std::sqrt(1.0 / d);
  for (int i = 0; i < d; ++i) {
    g(i, i) = Complex(diag_sd * rng.normal(), 0.0);
    for (int j = i + 1; j < d; ++j) {
      Complex z(off_sd * rng.normal(), off_sd * rng.normal());
      g(i, j) = z;
      g(j, i) = std::conj(z);
    }
  }
  return g;
}

CMat gue_star(int d, Rng& rng) {
  CMat g = gue(d, rng);
  Complex tr = g.trace();
  g -= (tr / static_cast<double>(d)) * CMat::Identity(d, d);
  return g;
}

HardInstance sample_hard_instance(int d, double sigma, Rng& rng) {
  if (sigma <= 0.0) throw std::domain_error("sample_hard_instance: sigma must be positive");
  if (sigma >= 1.0 / 3.0)
    throw std::domain_error("sample_hard_instance: sigma >= 1/3 leaves no PSD mass under ||g|| <= 4");
  HardInstance inst;
  inst.dim = d;
  inst.gue_scale = sigma;
  for (int attempt = 1;; ++attempt) {
    CMat g = gue_star(d, rng);
    double op = hermitian_eigenvalues_desc(g).cwiseAbs().maxCoeff();
    if (op <= 4.0 && sigma * op <= 1.0) {
      inst.g = g;
      inst.state = (CMat::Identity(d, d) + sigma * g) / static_cast<double>(d);
      inst.attempts = attempt;
      return inst;
    }
    if (attempt > 100000)
      throw std::runtime_error("sample_hard_instance: rejection budget exhausted");
  }
}

HardInstance sample_hard_instance(int d, double eps, double c, Rng& rng) {
  return sample_hard_instance(d, c * eps, rng);
}

HaarMomentCheck haar_moment_check(const CMat& x, const CMat& y, int n, Rng& rng) {
  int d = static_cast<int>(x.rows());
  if (y.rows() != d || y.cols() != d || x.cols() != d)
    throw std::invalid_argument("haar_moment_check: dimension mismatch");
  HaarMomentCheck out;
  double trx = x.trace().real();
  double atry = y.trace().real();
  double xf2 = x.squaredNorm();
  out.exact = (xf2 - trx * trx / d) / (d * d - 1.0) *
                  (y - (atry / d) * CMat::Identity(d, d)) +
              (trx * trx * atry / (d * d)) * CMat::Identity(d, d);

  CMat mean = CMat::Zero(d, d);
  RMat m2_re = RMat::Zero(d, d);
  RMat m2_im = RMat::Zero(d, d);
  for (int i = 0; i < n; ++i) {
    CMat u = haar_unitary(d, rng);
    CMat rot = u.adjoint() * x * u;
    double inner = (rot.conjugate().cwiseProduct(y)).sum().real();
    CMat sample = rot * inner;
    mean += sample;
    m2_re += sample.real().cwiseAbs2();
    m2_im += sample.imag().cwiseAbs2();
  }
  mean /= static_cast<double>(n);
  out.empirical = mean;
  out.max_abs_dev = (mean - out.exact).cwiseAbs().maxCoeff();
  double max_se = 0.0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      double var_re = m2_re(i, j) / n - mean(i, j).real() * mean(i, j).real();
      double var_im = m2_im(i, j) / n - mean(i, j).imag() * mean(i, j).imag();
      max_se = std::max(max_se, std::sqrt(std::max(var_re + var_im, 0.0) / n));
    }
  }
  out.max_stderr = max_se;
  return out;
}

}  // namespace swt
