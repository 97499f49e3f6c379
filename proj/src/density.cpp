#include "swtomo/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace swt {

bool is_hermitian(const CMat& m, double tol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_density(const CMat& m, double tol) {
  if (!is_hermitian(m, tol)) return false;
  if (std::abs(m.trace().real() - 1.0) > tol || std::abs(m.trace().imag()) > tol) return false;
  RVec eigs = hermitian_eigenvalues_desc(m);
  return eigs.minCoeff() >= -tol;
}

RVec hermitian_eigenvalues_desc(const CMat& m) {
  Eigen::SelfAdjointEigenSolver<CMat> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().reverse();
}

std::pair<RVec, CMat> hermitian_eig_desc(const CMat& m) {
  Eigen::SelfAdjointEigenSolver<CMat> solver(m);
  int d = static_cast<int>(m.rows());
  RVec vals(d);
  CMat vecs(d, d);
  for (int i = 0; i < d; ++i) {
    vals[i] = solver.eigenvalues()[d - 1 - i];
    CVec col = solver.eigenvectors().col(d - 1 - i);
    for (int r = 0; r < d; ++r) {
      if (std::abs(col[r]) > 1e-9) {
        col *= std::conj(col[r]) / std::abs(col[r]);
        break;
      }
    }
    vecs.col(i) = col;
  }
  return {vals, vecs};
}

RVec project_capped_simplex(const RVec& vals, double cap) {
  int n = static_cast<int>(vals.size());
  if (cap * n < 1.0 - 1e-12)
    throw std::domain_error("project_capped_simplex: cap * n < 1 is infeasible");
  // Coordinates never exceed the total mass, so caps above 1 are inactive.
  cap = std::min(cap, 1.0);

  auto mass_at = [&](double tau) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += std::clamp(vals[i] - tau, 0.0, cap);
    return s;
  };

  // sum clamp(v - tau) is piecewise linear and non-increasing in tau, with
  // breakpoints at v_i and v_i - cap.  Locate the segment containing mass 1
  // and solve linearly inside it.
  std::vector<double> brk;
  brk.reserve(2 * n);
  for (int i = 0; i < n; ++i) {
    brk.push_back(vals[i]);
    brk.push_back(vals[i] - cap);
  }
  std::sort(brk.begin(), brk.end());
  double lo = brk.front() - 1.0, hi = brk.back();
  for (double b : brk) {
    if (mass_at(b) >= 1.0) lo = std::max(lo, b);
    if (mass_at(b) <= 1.0) hi = std::min(hi, b);
  }
  double m_lo = mass_at(lo), m_hi = mass_at(hi);
  double tau = m_lo > m_hi ? lo + (m_lo - 1.0) / (m_lo - m_hi) * (hi - lo) : lo;

  RVec out(n);
  for (int i = 0; i < n; ++i) out[i] = std::clamp(vals[i] - tau, 0.0, cap);
  double s = out.sum();
  if (std::abs(s - 1.0) > 1e-9)
    throw std::runtime_error("project_capped_simplex: projection failed to normalize");
  return out;
}

CMat project_density(const CMat& hermitian, double op_cap) {
  auto [vals, vecs] = hermitian_eig_desc((hermitian + hermitian.adjoint()) / 2.0);
  int d = static_cast<int>(hermitian.rows());
  if (op_cap * d < 1.0 - 1e-12)
    throw std::domain_error("project_density: op_cap * d < 1 is infeasible");
  RVec projected = project_capped_simplex(vals, op_cap);
  return vecs * projected.asDiagonal() * vecs.adjoint();
}

Norms norms_of(const CMat& m) {
  Norms n;
  n.frobenius = m.norm();
  if (is_hermitian(m, 1e-9)) {
    RVec eigs = hermitian_eigenvalues_desc(m);
    n.trace = eigs.cwiseAbs().sum();
    n.op = eigs.cwiseAbs().maxCoeff();
  } else {
    Eigen::JacobiSVD<CMat> svd(m);
    n.trace = svd.singularValues().sum();
    n.op = svd.singularValues().maxCoeff();
  }
  return n;
}

Norms distance_norms(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("distance_norms: dimension mismatch");
  return norms_of(a - b);
}

double trace_distance(const CMat& a, const CMat& b) {
  return distance_norms(a, b).trace;
}

}  // namespace swt
