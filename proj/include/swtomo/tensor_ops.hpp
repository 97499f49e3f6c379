#pragma once

#include <span>
#include <vector>

#include "swtomo/types.hpp"

namespace swt {

// Canonical mode convention: a vector v in C^{d^t} is read as a t-mode tensor
// with mode 1 the slowest-varying index, i.e. the flat index of
// (i_1, ..., i_t) is i_1 d^{t-1} + i_2 d^{t-2} + ... + i_t.  This matches the
// Kronecker product A_1 (x) A_2 (x) ... (x) A_t with the first factor slowest.

// Kronecker product, first factor slowest.
CMat kron(const CMat& a, const CMat& b);
CMat kron_list(std::span<const CMat> factors);
CMat kron_power(const CMat& a, int t);

// Apply a matrix to one mode of v; dims lists the current per-mode dimensions
// and is updated in place when the mode dimension changes.
CVec mode_apply(const CMat& a, const CVec& v, std::vector<int>& dims, int mode);

// Apply (F_1 (x) ... (x) F_t) to v, all modes of dimension d.
CVec apply_factors(std::span<const CMat> factors, const CVec& v, int local_dim);
// Apply A^{(x) t} to v.
CVec apply_kron_power(const CMat& a, int t, const CVec& v, int local_dim);

// Flattening of v over a subset of modes (1-indexed, strictly increasing
// within the subset): rows indexed by the subset modes, columns by the rest,
// both in increasing mode order.  A pure re-indexing of the entries.
// Throws std::domain_error on an empty or full subset, or out-of-range modes.
CMat unfold(const CVec& v, int t, int local_dim, std::span<const int> subset);

// G_j(v) = sum over |S| = j of unfold(v, S) unfold(v, S)^dagger.
// j = t is allowed and uses the single full-set flattening (a column vector).
CMat g_matrix(const CVec& v, int t, int local_dim, int j);

// <sum_sym E^{(x) k} (x) I^{(x) t-k}, v v^dagger> computed as <E^{(x) k}, G_k(v)>,
// with the symmetric sum running over the C(t, k) distinct placements.
double sym_inner(const CMat& e, int k, const CVec& v, int t);

}  // namespace swt
