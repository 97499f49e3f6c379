// Acceptance harness: runs the numbered criteria and prints one line per
// criterion.  With no arguments all criteria run; otherwise each argument
// selects one by number.  Exit code 0 iff every selected criterion passed.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "swtomo/density.hpp"
#include "swtomo/keyl.hpp"
#include "swtomo/partitions.hpp"
#include "swtomo/rng.hpp"
#include "swtomo/schur_poly.hpp"
#include "swtomo/types.hpp"
#include "swtomo/verify.hpp"

using namespace swt;

namespace {

constexpr std::uint64_t kSeed = 20240901;

struct Criterion {
  int number;
  const char* name;
  bool (*run)(std::string& detail);
};

bool all_pass(const std::vector<CheckResult>& results, std::string& detail) {
  bool ok = true;
  for (const CheckResult& r : results) {
    if (!r.pass) {
      ok = false;
      detail += " [" + r.name + ": " + r.detail + "]";
    }
  }
  if (ok && !results.empty()) detail += " " + results.back().detail;
  return ok;
}

// Grid shared by criteria 1, 2 and 5: d <= 4, t <= 5, d^t <= 1024.
std::vector<std::pair<int, int>> projector_grid() {
  std::vector<std::pair<int, int>> grid;
  for (int d = 2; d <= 4; ++d) {
    for (int t = 1; t <= 5; ++t) {
      long long dt = 1;
      for (int i = 0; i < t; ++i) dt *= d;
      if (dt <= 1024) grid.emplace_back(d, t);
    }
  }
  return grid;
}

bool criterion1(std::string& detail) {
  std::vector<CheckResult> results;
  for (auto [d, t] : projector_grid()) results.push_back(check_schur_completeness(d, t, 1e-8));
  return all_pass(results, detail);
}

bool criterion2(std::string& detail) {
  Rng rng(kSeed);
  std::vector<CheckResult> results;
  for (auto [d, t] : projector_grid())
    results.push_back(check_born_consistency(d, t, 50, 1e-8, rng.substream(d * 10 + t)));
  return all_pass(results, detail);
}

bool criterion3(std::string& detail) {
  Rng rng(kSeed + 3);
  std::vector<CheckResult> results;
  results.push_back(
      check_rsk_chi_square(4, 2, RVec::Constant(2, 0.5), 100000, 0.001, rng.substream(1)));
  results.push_back(
      check_rsk_chi_square(5, 3, RVec::Constant(3, 1.0 / 3.0), 100000, 0.001, rng.substream(2)));
  RVec alpha(3);
  alpha << 0.5, 0.3, 0.2;
  results.push_back(check_rsk_chi_square(5, 3, alpha, 100000, 0.001, rng.substream(3)));
  return all_pass(results, detail);
}

bool criterion4(std::string& detail) {
  Rng rng(kSeed + 4);
  std::vector<CheckResult> results;
  results.push_back(check_sw_moment_bound(8, 4));
  results.push_back(check_sw_typical_mass(8, 4, 10000, rng.substream(1)));
  return all_pass(results, detail);
}

bool criterion5(std::string& detail) {
  Rng rng(kSeed + 5);
  std::vector<CheckResult> results;
  for (auto [d, t] : projector_grid()) results.push_back(check_keyl_block_identity(d, t, 1e-8));
  results.push_back(check_povm_validity(2, 3, 2000, rng.substream(1)));
  results.push_back(check_povm_validity(3, 2, 2000, rng.substream(2)));
  return all_pass(results, detail);
}

bool criterion6(std::string& detail) {
  Rng rng(kSeed + 6);
  std::vector<CheckResult> results;
  results.push_back(check_estimator_mean(2, 2, 1e-3, 20000, rng.substream(1)));
  results.push_back(check_estimator_mean(2, 3, 1e-3, 20000, rng.substream(2)));
  return all_pass(results, detail);
}

bool criterion7(std::string& detail) {
  Rng rng(kSeed + 7);
  std::vector<CheckResult> results;
  results.push_back(check_variance_theta(2, 2, 20000, rng.substream(1)));
  results.push_back(check_variance_theta(4, 2, 20000, rng.substream(2)));
  results.push_back(check_t_benefit(4, {1, 2, 4}, 1e-3, 400, 40, rng.substream(3)));
  return all_pass(results, detail);
}

bool criterion8(std::string& detail) {
  Rng rng(kSeed + 8);
  std::vector<CheckResult> results;
  results.push_back(check_split_identity(100, 1e-12, rng.substream(1)));
  results.push_back(check_split_measurement(2, 1, 50000, 0.001, rng.substream(2)));
  results.push_back(check_split_measurement(2, 2, 50000, 0.001, rng.substream(3)));
  return all_pass(results, detail);
}

bool criterion9(std::string& detail) {
  Rng rng(kSeed + 9);
  std::vector<CheckResult> results;
  results.push_back(check_mixture_simulation(2, 2, 3, 50000, 0.001, rng.substream(1)));
  return all_pass(results, detail);
}

bool criterion10(std::string& detail) {
  Rng rng(kSeed + 10);
  std::vector<CheckResult> results;
  std::vector<long long> budgets = {20000, 40000, 80000, 160000, 320000};
  results.push_back(check_full_learn_hard(4, 2, 0.3, 20, budgets, 0.15, rng.substream(1)));
  return all_pass(results, detail);
}

bool criterion11(std::string& detail) {
  Rng rng(kSeed + 11);
  std::vector<CheckResult> results;
  results.push_back(check_skewness_random(3, 4, 1000, rng.substream(1)));

  CMat e2(2, 2);
  e2 << 1.0 / std::sqrt(2.0), 0.0, 0.0, -1.0 / std::sqrt(2.0);
  results.push_back(check_rotation_average(2, 2, e2, 10000, rng.substream(2)));
  CMat e3 = CMat::Zero(3, 3);
  e3(0, 0) = 0.6;
  e3(1, 1) = -0.3;
  e3(2, 2) = -0.3;
  results.push_back(check_rotation_average(3, 3, e3, 10000, rng.substream(3)));

  results.push_back(check_linearization_bound(2, 2, 1e-3, 10000, rng.substream(4)));
  results.push_back(check_linearization_bound(2, 3, 1e-3, 10000, rng.substream(5)));
  results.push_back(check_linearization_bound(3, 2, 1e-3, 10000, rng.substream(6)));
  return all_pass(results, detail);
}

const Criterion kCriteria[] = {
    {1, "schur-weyl completeness", criterion1},
    {2, "weak-Schur/Born consistency", criterion2},
    {3, "RSK sampler correctness", criterion3},
    {4, "Schur-Weyl moment bounds", criterion4},
    {5, "Keyl block identity and POVM validity", criterion5},
    {6, "estimator mean law", criterion6},
    {7, "variance-theta law and t-benefit", criterion7},
    {8, "split machinery", criterion8},
    {9, "mixture simulation", criterion9},
    {10, "end-to-end hard instances", criterion10},
    {11, "diagnostics bounds", criterion11},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  bool all_ok = true;
  for (const Criterion& c : kCriteria) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), c.number) == selected.end())
      continue;
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string(" exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d: %s (%.1fs)%s\n", ok ? "PASS" : "FAIL", c.number, c.name,
                secs, detail.c_str());
    std::fflush(stdout);
    if (!ok) all_ok = false;
  }
  return all_ok ? 0 : 1;
}
