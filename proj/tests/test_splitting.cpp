#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "swtomo/density.hpp"
#include "swtomo/random_matrices.hpp"
#include "swtomo/rng.hpp"
#include "swtomo/splitting.hpp"
#include "swtomo/stats.hpp"
#include "swtomo/tensor_ops.hpp"

using namespace swt;

TEST_CASE("make_split_spec") {
  RVec uniform = RVec::Constant(4, 0.25);
  SplitSpec s0 = SplitSpec::from_eigenvalues(uniform, 4);
  CHECK(s0.b == std::vector<int>{0, 0, 0, 0});
  CHECK(s0.k == 4);

  RVec skew(2);
  skew << 0.75, 0.25;
  SplitSpec s1 = SplitSpec::from_eigenvalues(skew, 2);
  CHECK(s1.b == std::vector<int>{1, 0});
  CHECK(s1.k == 3);

  for (int d : {2, 3, 4, 8}) {
    RVec pure = RVec::Zero(d);
    pure[0] = 1.0;
    SplitSpec sp = SplitSpec::from_eigenvalues(pure, d);
    CHECK(sp.b[0] == static_cast<int>(std::ceil(std::log2(static_cast<double>(d)))));
    CHECK(sp.k <= 4 * d);
  }
}

TEST_CASE("split examples and linearity") {
  RVec eigs(2);
  eigs << 0.75, 0.25;
  SplitSpec spec = SplitSpec::from_eigenvalues(eigs, 2);
  CMat m = CMat::Zero(2, 2);
  m(0, 0) = 0.75;
  m(1, 1) = 0.25;
  CMat s = split(m, spec);
  CMat expected = CMat::Zero(3, 3);
  expected(0, 0) = expected(1, 1) = 0.375;
  expected(2, 2) = 0.25;
  CHECK((s - expected).cwiseAbs().maxCoeff() <= 1e-15);

  // Identity spec.
  SplitSpec trivial = SplitSpec::from_exponents({0, 0});
  CHECK((split(m, trivial) - m).cwiseAbs().maxCoeff() == 0.0);

  // Linearity.
  Rng rng(501);
  CMat a = ginibre(2, rng), b = ginibre(2, rng);
  CHECK((split(a + 2.0 * b, spec) - split(a, spec) - 2.0 * split(b, spec)).cwiseAbs().maxCoeff() <=
        1e-14);
}

TEST_CASE("rec inverts split and norm bounds hold") {
  Rng rng(503);
  for (int trial = 0; trial < 100; ++trial) {
    int d = 2 + rng.uniform_int(3);
    std::vector<int> b(d);
    for (int j = 0; j < d; ++j) b[j] = rng.uniform_int(3);
    SplitSpec spec = SplitSpec::from_exponents(b);
    CMat m = ginibre(d, rng);
    CMat s = split(m, spec);
    CHECK((rec(s, spec) - m).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(s.norm() <= m.norm() + 1e-12);

    CMat n = ginibre(spec.k, rng);
    double inflation = std::pow(2.0, spec.max_b() / 2.0);
    CHECK(rec(n, spec).norm() <= inflation * n.norm() + 1e-9);
  }

  SplitSpec spec = SplitSpec::from_exponents({2, 0});
  CMat zero = CMat::Zero(spec.k, spec.k);
  CHECK(rec(zero, spec).cwiseAbs().maxCoeff() == 0.0);

  // Norm inflation equality witness: normalized diagonal mass on one group.
  CMat witness = CMat::Zero(spec.k, spec.k);
  for (int s = 0; s < 4; ++s) witness(s, s) = 0.5;  // group 0 has 2^2 slots
  CHECK(witness.norm() == doctest::Approx(1.0));
  CHECK(rec(witness, spec).norm() == doctest::Approx(2.0));  // 2^{max b/2} = 2
}

TEST_CASE("split preserves density matrices and bounds eigenvalues") {
  Rng rng(509);
  for (int trial = 0; trial < 30; ++trial) {
    int d = 2 + rng.uniform_int(3);
    CMat g = ginibre(d, rng);
    CMat rho = g * g.adjoint();
    rho /= rho.trace().real();
    RVec eigs = hermitian_eigenvalues_desc(rho).cwiseMax(0.0);
    SplitSpec spec = SplitSpec::from_eigenvalues(eigs, d);
    CHECK(is_density(split(rho, spec), 1e-10));
    CMat diag_split = split(CMat(eigs.cast<Complex>().asDiagonal()), spec);
    CHECK(norms_of(diag_split).op <= 1.0 / d + 1e-12);
  }
}

TEST_CASE("embedding isometries average to the split") {
  SplitSpec trivial = SplitSpec::from_exponents({0, 0});
  CHECK((embed_isometry(trivial, "") - CMat::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);

  SplitSpec spec10 = SplitSpec::from_exponents({1, 0});
  CMat v0 = embed_isometry(spec10, "0");
  CHECK(v0(0, 0) == Complex(1, 0));  // e_1 -> e_{(1,"0")}
  CHECK(v0(2, 1) == Complex(1, 0));  // e_2 -> e_{(2,"")}
  CMat v1 = embed_isometry(spec10, "1");
  CHECK(v1(1, 0) == Complex(1, 0));
  CHECK(v1(2, 1) == Complex(1, 0));

  Rng rng(521);
  for (const auto& exps : std::vector<std::vector<int>>{{1, 1}, {1, 0}, {2, 1}}) {
    SplitSpec spec = SplitSpec::from_exponents(exps);
    CMat m = ginibre(spec.d(), rng);
    CMat avg = CMat::Zero(spec.k, spec.k);
    int need = spec.max_b();
    for (int bits = 0; bits < (1 << need); ++bits) {
      std::string s(need, '0');
      for (int p = 0; p < need; ++p)
        if (bits & (1 << (need - 1 - p))) s[p] = '1';
      CMat v = embed_isometry(spec, s);
      CHECK((v.adjoint() * v - CMat::Identity(spec.d(), spec.d())).cwiseAbs().maxCoeff() <= 1e-14);
      avg += v * m * v.adjoint();
    }
    avg /= static_cast<double>(1 << need);
    CHECK((avg - split(m, spec)).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("split measurement simulation: trivial spec reduces to direct Born") {
  Rng rng(523);
  CMat rho = CMat::Zero(2, 2);
  rho(0, 0) = 0.7;
  rho(1, 1) = 0.3;
  SplitSpec trivial = SplitSpec::from_exponents({0, 0});
  Rank1Povm povm = computational_povm(2);
  long long n = 20000;
  std::vector<long long> counts(2, 0);
  for (long long i = 0; i < n; ++i) ++counts[simulate_split_measurement(rho, 1, povm, trivial, rng)];
  double p0 = static_cast<double>(counts[0]) / n;
  CHECK(std::abs(p0 - 0.7) <= 5.0 * std::sqrt(0.7 * 0.3 / n));
}

TEST_CASE("split measurement simulation: computational basis example") {
  Rng rng(541);
  CMat rho = CMat::Zero(2, 2);
  rho(0, 0) = 0.75;
  rho(1, 1) = 0.25;
  RVec eigs(2);
  eigs << 0.75, 0.25;
  SplitSpec spec = SplitSpec::from_eigenvalues(eigs, 2);
  Rank1Povm povm = computational_povm(3);

  long long n = 50000;
  std::vector<long long> counts(3, 0);
  for (long long i = 0; i < n; ++i) ++counts[simulate_split_measurement(rho, 1, povm, spec, rng)];
  std::vector<double> expected = {0.375, 0.375, 0.25};
  Chi2Gof gof = chi_square_gof(counts, expected, n);
  CHECK(gof.p_value > 0.001);
}

TEST_CASE("split measurement simulation matches the exact Born law at t = 2") {
  Rng rng(547);
  CMat g = ginibre(2, rng);
  CMat rho = g * g.adjoint();
  rho /= rho.trace().real();
  RVec eigs = hermitian_eigenvalues_desc(rho).cwiseMax(0.0);
  SplitSpec spec = SplitSpec::from_eigenvalues(eigs, 2);

  // Split is defined entrywise, so measure in the eigenbasis of rho.
  auto [vals, vecs] = hermitian_eig_desc(rho);
  CMat diag_rho = CMat(vals.cast<Complex>().asDiagonal());

  int t = 2;
  long long kt = spec.k * spec.k;
  Rank1Povm povm = random_rank1_povm(static_cast<int>(kt), 2, rng);
  CMat split_power = kron_power(split(diag_rho, spec), t);
  std::vector<double> expected;
  for (int z = 0; z < povm.size(); ++z)
    expected.push_back(povm.weights[z] *
                       (povm.vectors[z].adjoint() * split_power * povm.vectors[z])(0, 0).real());

  long long n = 30000;
  std::vector<long long> counts(povm.size(), 0);
  for (long long i = 0; i < n; ++i)
    ++counts[simulate_split_measurement(diag_rho, t, povm, spec, rng)];
  Chi2Gof gof = chi_square_gof(counts, expected, n);
  CHECK(gof.p_value > 0.001);

  // Completeness violation is rejected.
  Rank1Povm broken = povm;
  broken.weights[0] *= 0.5;
  CHECK_THROWS_AS(simulate_split_measurement(diag_rho, t, broken, spec, rng), std::domain_error);
}

TEST_CASE("split spec serialization round trip") {
  SplitSpec spec = SplitSpec::from_exponents({2, 1, 0});
  CHECK(spec.k == 7);
  std::string json = spec.to_json();
  SplitSpec back = SplitSpec::from_json(json);
  CHECK(back.b == spec.b);
  CHECK(back.k == spec.k);
}
