#pragma once

#include <memory>
#include <span>
#include <vector>

#include "swtomo/partitions.hpp"
#include "swtomo/types.hpp"

namespace swt {

// Permutation of [t] as the image list: pi maps i -> perm[i] (0-based).
using Perm = std::vector<int>;

std::vector<Perm> all_permutations(int t);
Partition cycle_type(const Perm& pi);

// Index map of P_pi on (C^d)^{(x) t}: out[i] is the flat row index such that
// P_pi e_i = e_{out[i]}.  P_pi (v_1 (x) ... (x) v_t) = v_{pi^{-1}(1)} (x) ... (x) v_{pi^{-1}(t)}.
std::vector<long long> permutation_index_map(const Perm& pi, int d);

RMat permutation_operator(const Perm& pi, int d);

// Exact irreducible character chi_lam at the given cycle type
// (Murnaghan-Nakayama recursion).  Throws std::domain_error on size mismatch.
long long character(const Partition& lam, const Partition& cycle);

// Pi_lam = (dim_syt(lam)/t!) sum_pi chi_lam(type(pi)) P_pi.  Real symmetric.
// Enforces t! <= 720 and d^t <= 4096.
RMat isotypic_projector(const Partition& lam, int d, int t);

// Diagonal 0/1 projector onto computational basis states whose symbol
// frequencies equal freq (length d, entries summing to t).
RMat weight_projector(std::span<const int> freq, int d, int t);
std::vector<long long> weight_basis_indices(std::span<const int> freq, int d, int t);

// Per-partition bundle on (C^d)^{(x) t}.
struct SchurBlock {
  Partition lam;
  int d = 0;
  int t = 0;
  RMat pi;        // isotypic projector Pi_lam
  RMat m_block;   // highest-weight projector M_lam
  RMat basis;     // orthonormal columns spanning range(M_lam)
  long long dim_sp = 0;  // dim_syt(lam)
  long long dim_v = 0;   // dim_ssyt(lam, d)
};

// M_lam as the projector onto range(Pi_lam W_lam); the two projectors commute
// so the product is itself the orthogonal projector onto the intersection.
// Basis columns come from an SVD with threshold 1e-8.
SchurBlock highest_weight_block(const Partition& lam, int d, int t);

// True iff Pi_lam annihilates every computational basis vector with symbol
// frequencies f whenever lam does not majorize sorted(f); vacuously true when
// lam majorizes.
bool weight_orthogonality_check(const Partition& lam, std::span<const int> freq, int d, int t);

// Immutable per-(d, t) bundle of all blocks with at most d parts, built once
// and shared; safe for concurrent reads.
class SchurCache {
 public:
  static std::shared_ptr<const SchurCache> get(int d, int t);

  int d() const { return d_; }
  int t() const { return t_; }
  const std::vector<SchurBlock>& blocks() const { return blocks_; }
  const SchurBlock& block(const Partition& lam) const;

 private:
  SchurCache(int d, int t);
  int d_;
  int t_;
  std::vector<SchurBlock> blocks_;
};

}  // namespace swt
