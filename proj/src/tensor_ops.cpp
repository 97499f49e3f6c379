#include "swtomo/tensor_ops.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace swt {

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMat kron_list(std::span<const CMat> factors) {
  if (factors.empty()) throw std::invalid_argument("kron_list: empty factor list");
  CMat out = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) out = kron(out, factors[i]);
  return out;
}

CMat kron_power(const CMat& a, int t) {
  if (t < 1) throw std::invalid_argument("kron_power: t must be positive");
  CMat out = a;
  for (int i = 1; i < t; ++i) out = kron(out, a);
  return out;
}

CVec mode_apply(const CMat& a, const CVec& v, std::vector<int>& dims, int mode) {
  int t = static_cast<int>(dims.size());
  if (mode < 1 || mode > t) throw std::domain_error("mode_apply: mode out of range");
  int d_in = dims[mode - 1];
  if (a.cols() != d_in) throw std::invalid_argument("mode_apply: dimension mismatch");
  int d_out = static_cast<int>(a.rows());

  long long inner = 1;
  for (int m = mode; m < t; ++m) inner *= dims[m];
  long long outer = 1;
  for (int m = 0; m < mode - 1; ++m) outer *= dims[m];

  CVec out(outer * d_out * inner);
  for (long long o = 0; o < outer; ++o) {
    for (long long in = 0; in < inner; ++in) {
      for (int r = 0; r < d_out; ++r) {
        Complex acc(0.0, 0.0);
        for (int c = 0; c < d_in; ++c)
          acc += a(r, c) * v[(o * d_in + c) * inner + in];
        out[(o * d_out + r) * inner + in] = acc;
      }
    }
  }
  dims[mode - 1] = d_out;
  return out;
}

CVec apply_factors(std::span<const CMat> factors, const CVec& v, int local_dim) {
  int t = static_cast<int>(factors.size());
  std::vector<int> dims(t, local_dim);
  CVec cur = v;
  for (int m = 1; m <= t; ++m) cur = mode_apply(factors[m - 1], cur, dims, m);
  return cur;
}

CVec apply_kron_power(const CMat& a, int t, const CVec& v, int local_dim) {
  std::vector<int> dims(t, local_dim);
  CVec cur = v;
  for (int m = 1; m <= t; ++m) cur = mode_apply(a, cur, dims, m);
  return cur;
}

CMat unfold(const CVec& v, int t, int local_dim, std::span<const int> subset) {
  if (subset.empty() || static_cast<int>(subset.size()) >= t)
    throw std::domain_error("unfold: subset must be nonempty and proper");
  std::vector<bool> in_subset(t, false);
  for (int m : subset) {
    if (m < 1 || m > t) throw std::domain_error("unfold: mode out of range");
    if (in_subset[m - 1]) throw std::domain_error("unfold: duplicate mode");
    in_subset[m - 1] = true;
  }
  int js = static_cast<int>(subset.size());
  long long rows = 1, cols = 1;
  for (int i = 0; i < js; ++i) rows *= local_dim;
  for (int i = 0; i < t - js; ++i) cols *= local_dim;

  // Strides of each mode in the flat index (mode 1 slowest).
  std::vector<long long> stride(t);
  long long s = 1;
  for (int m = t - 1; m >= 0; --m) {
    stride[m] = s;
    s *= local_dim;
  }
  std::vector<long long> row_stride, col_stride;
  for (int m = 0; m < t; ++m)
    (in_subset[m] ? row_stride : col_stride).push_back(stride[m]);

  CMat out(rows, cols);
  std::vector<int> rdig(js, 0), cdig(t - js, 0);
  for (long long r = 0; r < rows; ++r) {
    long long rbase = 0;
    {
      long long rr = r;
      for (int i = js - 1; i >= 0; --i) {
        rbase += (rr % local_dim) * row_stride[i];
        rr /= local_dim;
      }
    }
    for (long long c = 0; c < cols; ++c) {
      long long idx = rbase;
      long long cc = c;
      for (int i = t - js - 1; i >= 0; --i) {
        idx += (cc % local_dim) * col_stride[i];
        cc /= local_dim;
      }
      out(r, c) = v[idx];
    }
  }
  return out;
}

namespace {

void for_each_subset(int t, int j, std::vector<int>& cur, int start,
                     const std::function<void(std::span<const int>)>& fn) {
  if (static_cast<int>(cur.size()) == j) {
    fn(cur);
    return;
  }
  for (int m = start; m <= t; ++m) {
    cur.push_back(m);
    for_each_subset(t, j, cur, m + 1, fn);
    cur.pop_back();
  }
}

}  // namespace

CMat g_matrix(const CVec& v, int t, int local_dim, int j) {
  if (j < 1 || j > t) throw std::domain_error("g_matrix: j out of range");
  long long dim = 1;
  for (int i = 0; i < j; ++i) dim *= local_dim;
  CMat g = CMat::Zero(dim, dim);
  if (j == t) {
    // Single full-set flattening: the vector itself as a column.
    g = v * v.adjoint();
    return g;
  }
  std::vector<int> cur;
  for_each_subset(t, j, cur, 1, [&](std::span<const int> subset) {
    CMat f = unfold(v, t, local_dim, subset);
    g.noalias() += f * f.adjoint();
  });
  return g;
}

double sym_inner(const CMat& e, int k, const CVec& v, int t) {
  int d = static_cast<int>(e.rows());
  CMat g = g_matrix(v, t, d, k);
  CMat ek = kron_power(e, k);
  return (ek.conjugate().cwiseProduct(g)).sum().real();
}

}  // namespace swt
