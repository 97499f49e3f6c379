#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "swtomo/density.hpp"
#include "swtomo/keyl.hpp"
#include "swtomo/random_matrices.hpp"
#include "swtomo/rng.hpp"
#include "swtomo/schur_blocks.hpp"
#include "swtomo/schur_poly.hpp"
#include "swtomo/tensor_ops.hpp"

using namespace swt;

namespace {

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// |class of cycle type mu| = t! / (prod_i i^{m_i} m_i!).
long long class_size(const Partition& mu) {
  int t = mu.total();
  std::map<int, int> mult;
  for (int p : mu.parts) ++mult[p];
  long long z = 1;
  for (const auto& [part, m] : mult) {
    for (int i = 0; i < m; ++i) z *= part;
    z *= factorial(m);
  }
  return factorial(t) / z;
}

int perm_sign(const Perm& pi) {
  Partition type = cycle_type(pi);
  int sign = 1;
  for (int len : type.parts)
    if (len % 2 == 0) sign = -sign;
  return sign;
}

CMat random_density(int d, Rng& rng) {
  CMat g = ginibre(d, rng);
  CMat rho = g * g.adjoint();
  return rho / rho.trace().real();
}

}  // namespace

TEST_CASE("permutation operators") {
  // Identity.
  Perm id = {0, 1, 2};
  CHECK((permutation_operator(id, 2) - RMat::Identity(8, 8)).norm() == 0.0);

  // t = 2 swap sends e_1 (x) e_2 to e_2 (x) e_1.
  Perm swap = {1, 0};
  RMat p = permutation_operator(swap, 2);
  RVec v = RVec::Zero(4);
  v[1] = 1.0;  // e_1 (x) e_2
  RVec w = p * v;
  CHECK(w[2] == 1.0);  // e_2 (x) e_1

  // Composition law P_pi P_tau = P_{pi tau} on random pairs.
  Rng rng(301);
  auto perms = all_permutations(4);
  for (int trial = 0; trial < 50; ++trial) {
    const Perm& a = perms[rng.uniform_int(static_cast<int>(perms.size()))];
    const Perm& b = perms[rng.uniform_int(static_cast<int>(perms.size()))];
    Perm ab(4);
    for (int i = 0; i < 4; ++i) ab[i] = a[b[i]];
    CHECK((permutation_operator(a, 2) * permutation_operator(b, 2) -
           permutation_operator(ab, 2))
              .norm() == 0.0);
  }
}

TEST_CASE("characters: examples and orthogonality oracle") {
  // Trivial representation.
  for (const Partition& mu : enumerate_partitions(5, 5))
    CHECK(character(Partition({5}), mu) == 1);

  // Dimension at the identity class.
  for (int t = 2; t <= 6; ++t) {
    Partition identity(std::vector<int>(t, 1));
    for (const Partition& lam : enumerate_partitions(t, t))
      CHECK(character(lam, identity) == dim_syt(lam));
  }

  // Sign character.
  auto perms = all_permutations(5);
  Partition sign_shape(std::vector<int>(5, 1));
  for (const Perm& pi : perms)
    CHECK(character(sign_shape, cycle_type(pi)) == perm_sign(pi));

  // Column orthogonality at t = 4, c = (2,1,1): sum_lam chi^2 = t!/|class|.
  Partition c211({2, 1, 1});
  long long sum_sq = 0;
  for (const Partition& lam : enumerate_partitions(4, 4)) {
    long long chi = character(lam, c211);
    sum_sq += chi * chi;
  }
  CHECK(sum_sq == factorial(4) / class_size(c211));
  CHECK(sum_sq == 4);

  // Row orthogonality over all classes for t <= 5.
  for (int t = 2; t <= 5; ++t) {
    auto lams = enumerate_partitions(t, t);
    for (const Partition& a : lams) {
      for (const Partition& b : lams) {
        long long acc = 0;
        for (const Partition& mu : lams)
          acc += class_size(mu) * character(a, mu) * character(b, mu);
        CHECK(acc == (a == b ? factorial(t) : 0));
      }
    }
  }

  CHECK_THROWS_AS(character(Partition({3}), Partition({2, 2})), std::domain_error);
}

TEST_CASE("isotypic projectors at t = 2") {
  RMat swap = permutation_operator({1, 0}, 2);
  RMat sym = isotypic_projector(Partition({2}), 2, 2);
  RMat anti = isotypic_projector(Partition({1, 1}), 2, 2);
  CHECK((sym - (RMat::Identity(4, 4) + swap) / 2.0).norm() <= 1e-12);
  CHECK((anti - (RMat::Identity(4, 4) - swap) / 2.0).norm() <= 1e-12);
}

TEST_CASE("isotypic projector traces and completeness") {
  CHECK(isotypic_projector(Partition({2, 1}), 2, 3).trace() == doctest::Approx(4.0));

  for (int d = 2; d <= 3; ++d) {
    for (int t = 2; t <= 4; ++t) {
      long long n = 1;
      for (int i = 0; i < t; ++i) n *= d;
      RMat sum = RMat::Zero(n, n);
      std::vector<RMat> projs;
      for (const Partition& lam : enumerate_partitions(t, d)) {
        RMat pi = isotypic_projector(lam, d, t);
        CHECK(pi.trace() ==
              doctest::Approx(static_cast<double>(dim_syt(lam) * dim_ssyt(lam, d))).epsilon(1e-10));
        CHECK((pi * pi - pi).cwiseAbs().maxCoeff() <= 1e-10);
        sum += pi;
        projs.push_back(pi);
      }
      CHECK((sum - RMat::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-10);
      for (std::size_t a = 0; a < projs.size(); ++a)
        for (std::size_t b = a + 1; b < projs.size(); ++b)
          CHECK((projs[a] * projs[b]).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }

  CHECK_THROWS_AS(isotypic_projector(Partition({7}), 2, 7), std::domain_error);
}

TEST_CASE("weight projectors") {
  std::vector<int> top = {3, 0};
  RMat w = weight_projector(top, 2, 3);
  CHECK(w.trace() == doctest::Approx(1.0));
  CHECK(w(0, 0) == 1.0);  // e_1^{(x) 3} is flat index 0

  std::vector<int> f11 = {1, 1};
  RMat w11 = weight_projector(f11, 2, 2);
  CHECK(w11.trace() == doctest::Approx(2.0));
  CHECK(w11(1, 1) == 1.0);
  CHECK(w11(2, 2) == 1.0);

  // Trace equals the multinomial coefficient.
  Rng rng(311);
  for (int trial = 0; trial < 10; ++trial) {
    int d = 3, t = 5;
    std::vector<int> f(d, 0);
    for (int i = 0; i < t; ++i) ++f[rng.uniform_int(d)];
    double multinomial = static_cast<double>(factorial(t));
    for (int j = 0; j < d; ++j) multinomial /= factorial(f[j]);
    CHECK(weight_projector(f, d, t).trace() == doctest::Approx(multinomial));
  }
}

TEST_CASE("highest weight blocks: small cases") {
  // lam = (2), d = 2: projector onto e_1 (x) e_1.
  SchurBlock b2 = highest_weight_block(Partition({2}), 2, 2);
  CHECK(b2.dim_sp == 1);
  RMat expected = RMat::Zero(4, 4);
  expected(0, 0) = 1.0;
  CHECK((b2.m_block - expected).cwiseAbs().maxCoeff() <= 1e-10);

  // lam = (1,1), d = 2: projector onto the singlet.
  SchurBlock b11 = highest_weight_block(Partition({1, 1}), 2, 2);
  CHECK(b11.dim_sp == 1);
  RVec singlet = RVec::Zero(4);
  singlet[1] = 1.0 / std::sqrt(2.0);
  singlet[2] = -1.0 / std::sqrt(2.0);
  CHECK((b11.m_block - singlet * singlet.transpose()).cwiseAbs().maxCoeff() <= 1e-10);

  // lam = (2,1), d = 2, t = 3: rank 2 and G_1(v) = diag(2, 1).
  SchurBlock b21 = highest_weight_block(Partition({2, 1}), 2, 3);
  CHECK(b21.dim_sp == 2);
  CHECK(b21.basis.cols() == 2);
  CMat target(2, 2);
  target << 2.0, 0.0, 0.0, 1.0;
  for (int j = 0; j < 2; ++j) {
    CVec v = b21.basis.col(j).cast<Complex>();
    CHECK((g_matrix(v, 3, 2, 1) - target).cwiseAbs().maxCoeff() <= 1e-8);
  }

  CHECK_THROWS_AS(highest_weight_block(Partition({1, 1, 1}), 2, 3), std::domain_error);
}

TEST_CASE("block structure: M inside Pi, correct trace") {
  for (int d = 2; d <= 3; ++d) {
    for (int t = 2; t <= 4; ++t) {
      auto cache = SchurCache::get(d, t);
      for (const SchurBlock& block : cache->blocks()) {
        CHECK(block.m_block.trace() == doctest::Approx(static_cast<double>(block.dim_sp))
                                           .epsilon(1e-8));
        CHECK((block.pi * block.m_block - block.m_block).cwiseAbs().maxCoeff() <= 1e-8);
        CHECK((block.m_block * block.m_block - block.m_block).cwiseAbs().maxCoeff() <= 1e-8);
      }
    }
  }
}

TEST_CASE("rotation average of M recovers Pi / dim_v") {
  Rng rng(313);
  int d = 2, t = 2, n = 4000;
  auto cache = SchurCache::get(d, t);
  for (const SchurBlock& block : cache->blocks()) {
    CMat mean = CMat::Zero(4, 4);
    RMat var_acc = RMat::Zero(4, 4);
    for (int i = 0; i < n; ++i) {
      CMat u = haar_unitary(d, rng);
      CMat sample = CMat::Zero(4, 4);
      for (int j = 0; j < block.basis.cols(); ++j) {
        CVec b = apply_kron_power(u, t, block.basis.col(j).cast<Complex>(), d);
        sample += static_cast<double>(block.dim_v) * (b * b.adjoint());
      }
      mean += sample;
      var_acc += sample.cwiseAbs2().real();
    }
    mean /= static_cast<double>(n);
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        double var = var_acc(r, c) / n - std::norm(mean(r, c));
        double se = std::sqrt(std::max(var, 0.0) / n) + 1e-9;
        CHECK(std::abs(mean(r, c) - Complex(block.pi(r, c), 0.0)) <= 5.0 * se);
      }
    }
  }
}

TEST_CASE("weight orthogonality check, exhaustive at t = 4, d = 3") {
  int d = 3, t = 4;
  std::vector<std::vector<int>> freqs;
  for (int a = 0; a <= t; ++a)
    for (int b = 0; a + b <= t; ++b) freqs.push_back({a, b, t - a - b});
  for (const Partition& lam : enumerate_partitions(t, d))
    for (const auto& f : freqs) CHECK(weight_orthogonality_check(lam, f, d, t));

  // Spot example: Pi_(1,1) annihilates e_1 (x) e_1.
  RMat anti = isotypic_projector(Partition({1, 1}), 2, 2);
  CHECK(anti.col(0).norm() <= 1e-12);
}

TEST_CASE("weak Schur probabilities match the Schur-Weyl law") {
  Rng rng(317);
  for (auto [d, t] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {2, 4}}) {
    for (int trial = 0; trial < 5; ++trial) {
      CMat rho = random_density(d, rng);
      SwDistribution via_blocks = weak_schur_probs(rho, t);
      RVec spectrum = hermitian_eigenvalues_desc(rho).cwiseMax(0.0);
      SwDistribution via_poly = sw_pmf(t, d, spectrum);
      for (const auto& [lam, q] : via_blocks.table)
        CHECK(q == doctest::Approx(via_poly.prob_of(lam)).epsilon(1e-8));
    }
  }
}
