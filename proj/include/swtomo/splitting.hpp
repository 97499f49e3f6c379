#pragma once

#include <string>
#include <vector>

#include "swtomo/povm.hpp"
#include "swtomo/rng.hpp"
#include "swtomo/types.hpp"

namespace swt {

// Exponent vector (b_1, ..., b_d) defining the splitting map.  Row/column
// labels are pairs (j, s) with s in {0,1}^{b_j}, sorted by j then
// lexicographically in s; this order is frozen and shared with serialization.
struct SplitSpec {
  std::vector<int> b;
  int k = 0;  // sum of 2^{b_j}

  static SplitSpec from_exponents(std::vector<int> b);
  // b_j = smallest nonnegative integer with 2^{b_j} >= d * eigs_j; guarantees
  // k <= 4d and eigs_j / 2^{b_j} <= 1/d.  eigs must be sorted descending.
  static SplitSpec from_eigenvalues(const RVec& eigs, int d);

  int d() const { return static_cast<int>(b.size()); }
  int max_b() const;
  int group_size(int j) const { return 1 << b[j]; }
  int group_offset(int j) const;

  std::string to_json() const;
  static SplitSpec from_json(const std::string& text);
};

// The splitting map: entry ((j1, s1), (j2, s2)) is M_{j1 j2} / 2^{max(b_j1, b_j2)}
// when the shorter of s1, s2 is a prefix of the longer, and 0 otherwise.
CMat split(const CMat& m, const SplitSpec& spec);

// Inverse summation map; rec(split(M)) = M.
CMat rec(const CMat& n, const SplitSpec& spec);

// Isometry C^d -> C^k mapping e_j to e_{(j, s[:b_j])}, where s is a bitstring
// of length max(b).  Averaging V_s M V_s^dagger over all s gives split(M).
CMat embed_isometry(const SplitSpec& spec, const std::string& s);

// Samples s_1..s_t independently uniform, pulls the POVM back through
// V_{s_1} (x) ... (x) V_{s_t}, and Born-samples on rho^{(x) t}.  The outcome
// law equals the Born law of the POVM on split(rho)^{(x) t}.
// Throws std::domain_error when the POVM is incomplete (tolerance 1e-8).
int simulate_split_measurement(const CMat& rho, int t, const Rank1Povm& povm_on_split,
                               const SplitSpec& spec, Rng& rng);

}  // namespace swt
