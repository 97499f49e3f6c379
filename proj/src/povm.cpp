#include "swtomo/povm.hpp"

#include <stdexcept>

#include "swtomo/random_matrices.hpp"

namespace swt {

CMat Rank1Povm::element(int z) const {
  return weights[z] * (vectors[z] * vectors[z].adjoint());
}

double Rank1Povm::completeness_defect() const {
  CMat sum = CMat::Zero(dim, dim);
  for (int z = 0; z < size(); ++z) sum += weights[z] * (vectors[z] * vectors[z].adjoint());
  return (sum - CMat::Identity(dim, dim)).cwiseAbs().maxCoeff();
}

Rank1Povm computational_povm(int dim) {
  Rank1Povm povm;
  povm.dim = dim;
  for (int i = 0; i < dim; ++i) {
    povm.weights.push_back(1.0);
    povm.vectors.push_back(CVec::Unit(dim, i));
  }
  return povm;
}

Rank1Povm basis_povm(const CMat& unitary) {
  Rank1Povm povm;
  povm.dim = static_cast<int>(unitary.rows());
  for (int i = 0; i < povm.dim; ++i) {
    povm.weights.push_back(1.0);
    povm.vectors.push_back(unitary.col(i));
  }
  return povm;
}

Rank1Povm random_rank1_povm(int dim, int n_bases, Rng& rng) {
  if (n_bases < 1) throw std::invalid_argument("random_rank1_povm: need at least one basis");
  Rank1Povm povm;
  povm.dim = dim;
  for (int b = 0; b < n_bases; ++b) {
    CMat u = haar_unitary(dim, rng);
    for (int i = 0; i < dim; ++i) {
      povm.weights.push_back(1.0 / n_bases);
      povm.vectors.push_back(u.col(i));
    }
  }
  return povm;
}

}  // namespace swt
