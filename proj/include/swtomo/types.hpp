#pragma once

#include <complex>

#include <Eigen/Dense>

namespace swt {

using Real = double;
using Complex = std::complex<double>;

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RMat = Mat<Real>;
using CMat = Mat<Complex>;
using RVec = Vec<Real>;
using CVec = Vec<Complex>;

}  // namespace swt
