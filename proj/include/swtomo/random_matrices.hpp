#pragma once

#include "swtomo/rng.hpp"
#include "swtomo/types.hpp"

namespace swt {

// d x d matrix of i.i.d. standard complex Gaussians (unit variance per
// real/imaginary component).
CMat ginibre(int d, Rng& rng);

// Haar-distributed unitary via QR of a Ginibre matrix with the R-diagonal
// phase fix.
CMat haar_unitary(int d, Rng& rng);

// Haar-random unit vector in C^d.
CVec haar_vector(int d, Rng& rng);

// GUE(d): Hermitian with diagonal N(0, 2/d) and off-diagonal
// N(0, 1/d) + i N(0, 1/d).
CMat gue(int d, Rng& rng);

// Trace-centered GUE: G - tr(G) I/d.  Exactly traceless.
CMat gue_star(int d, Rng& rng);

struct HardInstance {
  int dim = 0;
  double gue_scale = 0.0;  // sigma
  CMat g;                  // conditioned GUE* draw
  CMat state;              // (I + sigma g)/d
  int attempts = 0;
};

// Rejection-samples GUE* until ||g|| <= 4 and (I + sigma g)/d is PSD, then
// returns the state.  sigma >= 1/3 makes a compliant draw impossible to
// condition on meaningfully and is a domain error.
HardInstance sample_hard_instance(int d, double sigma, Rng& rng);
HardInstance sample_hard_instance(int d, double eps, double c, Rng& rng);

struct HaarMomentCheck {
  CMat empirical;
  CMat exact;
  double max_abs_dev = 0.0;
  double max_stderr = 0.0;
};

// Empirical mean of (U^dag X U) <U^dag X U, Y> over n Haar draws against the
// closed form
//   (||X||_F^2 - tr(X)^2/d)/(d^2-1) (Y - tr(Y) I/d) + tr(X)^2 tr(Y) I / d^2.
HaarMomentCheck haar_moment_check(const CMat& x, const CMat& y, int n, Rng& rng);

}  // namespace swt
