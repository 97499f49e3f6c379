#pragma once

#include <limits>
#include <utility>

#include "swtomo/types.hpp"

namespace swt {

bool is_hermitian(const CMat& m, double tol = 1e-10);

// Hermitian, PSD and unit trace within tol.
bool is_density(const CMat& m, double tol = 1e-10);

// Eigenvalues of a Hermitian matrix in descending order.
RVec hermitian_eigenvalues_desc(const CMat& m);

// Descending eigenvalues with phase-fixed eigenvectors (first component of
// magnitude above 1e-9 made real positive), for reproducible golden files.
std::pair<RVec, CMat> hermitian_eig_desc(const CMat& m);

// Euclidean projection of vals onto {x : 0 <= x_i <= cap, sum x = 1} via
// breakpoint search on the shift (the minimizer is clamp(vals - tau, 0, cap)).
// Throws std::domain_error when cap * len < 1.
RVec project_capped_simplex(const RVec& vals, double cap);

// Frobenius-nearest matrix with the same eigenbasis whose spectrum lies in
// [0, op_cap] and sums to 1; op_cap = infinity gives the plain density
// projection.
CMat project_density(const CMat& hermitian,
                     double op_cap = std::numeric_limits<double>::infinity());

struct Norms {
  double trace = 0.0;      // Schatten-1
  double frobenius = 0.0;  // Schatten-2
  double op = 0.0;         // Schatten-inf
};

Norms norms_of(const CMat& m);
Norms distance_norms(const CMat& a, const CMat& b);

// ||a - b||_1 (no 1/2 factor; conventions documented in the README).
double trace_distance(const CMat& a, const CMat& b);

}  // namespace swt
