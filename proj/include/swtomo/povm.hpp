#pragma once

#include <vector>

#include "swtomo/rng.hpp"
#include "swtomo/types.hpp"

namespace swt {

// Rank-1 POVM {w_z z z^dagger} with unit vectors z; complete when
// sum_z w_z z z^dagger = I.
struct Rank1Povm {
  int dim = 0;
  std::vector<double> weights;
  std::vector<CVec> vectors;

  int size() const { return static_cast<int>(weights.size()); }
  CMat element(int z) const;
  double completeness_defect() const;  // max-abs deviation of the sum from I
};

Rank1Povm computational_povm(int dim);
// Columns of a unitary as a projective measurement.
Rank1Povm basis_povm(const CMat& unitary);
// Uniform mixture of n_bases Haar-random orthonormal bases.
Rank1Povm random_rank1_povm(int dim, int n_bases, Rng& rng);

}  // namespace swt
