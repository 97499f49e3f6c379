#include "swtomo/splitting.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "swtomo/tensor_ops.hpp"

namespace swt {

SplitSpec SplitSpec::from_exponents(std::vector<int> b) {
  SplitSpec spec;
  spec.b = std::move(b);
  spec.k = 0;
  for (int e : spec.b) {
    if (e < 0) throw std::invalid_argument("SplitSpec: exponents must be nonnegative");
    spec.k += 1 << e;
  }
  return spec;
}

SplitSpec SplitSpec::from_eigenvalues(const RVec& eigs, int d) {
  if (eigs.size() != d) throw std::invalid_argument("SplitSpec: eigs length must equal d");
  std::vector<int> b(d, 0);
  for (int j = 0; j < d; ++j) {
    if (eigs[j] < -1e-12) throw std::invalid_argument("SplitSpec: negative eigenvalue");
    if (j > 0 && eigs[j] > eigs[j - 1] + 1e-12)
      throw std::invalid_argument("SplitSpec: eigs must be sorted descending");
    double target = d * std::max(0.0, eigs[j]);
    while ((1 << b[j]) < target) ++b[j];
  }
  return from_exponents(std::move(b));
}

int SplitSpec::max_b() const {
  int m = 0;
  for (int e : b) m = std::max(m, e);
  return m;
}

int SplitSpec::group_offset(int j) const {
  int off = 0;
  for (int i = 0; i < j; ++i) off += group_size(i);
  return off;
}

std::string SplitSpec::to_json() const {
  nlohmann::json j;
  j["b"] = b;
  j["k"] = k;
  return j.dump();
}

SplitSpec SplitSpec::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  SplitSpec spec = from_exponents(j.at("b").get<std::vector<int>>());
  if (j.contains("k") && j["k"].get<int>() != spec.k)
    throw std::invalid_argument("SplitSpec: stored k inconsistent with exponents");
  return spec;
}

// Bitstrings are encoded MSB-first as their lexicographic rank within the
// group, so "s1 is a prefix of s2" becomes a right shift comparison.
CMat split(const CMat& m, const SplitSpec& spec) {
  int d = spec.d();
  if (m.rows() != d || m.cols() != d) throw std::invalid_argument("split: dimension mismatch");
  CMat out = CMat::Zero(spec.k, spec.k);
  for (int j1 = 0; j1 < d; ++j1) {
    for (int j2 = 0; j2 < d; ++j2) {
      int b1 = spec.b[j1], b2 = spec.b[j2];
      int bmax = std::max(b1, b2);
      int bmin = std::min(b1, b2);
      double scale = 1.0 / static_cast<double>(1 << bmax);
      int off1 = spec.group_offset(j1), off2 = spec.group_offset(j2);
      for (int s1 = 0; s1 < spec.group_size(j1); ++s1) {
        for (int s2 = 0; s2 < spec.group_size(j2); ++s2) {
          int short_val = b1 <= b2 ? s1 : s2;
          int long_val = b1 <= b2 ? s2 : s1;
          if ((long_val >> (bmax - bmin)) != short_val) continue;
          out(off1 + s1, off2 + s2) = m(j1, j2) * scale;
        }
      }
    }
  }
  return out;
}

CMat rec(const CMat& n, const SplitSpec& spec) {
  int d = spec.d();
  if (n.rows() != spec.k || n.cols() != spec.k)
    throw std::invalid_argument("rec: dimension mismatch");
  CMat out = CMat::Zero(d, d);
  for (int j1 = 0; j1 < d; ++j1) {
    for (int j2 = 0; j2 < d; ++j2) {
      int b1 = spec.b[j1], b2 = spec.b[j2];
      int off1 = spec.group_offset(j1), off2 = spec.group_offset(j2);
      Complex sum(0.0, 0.0);
      if (b1 <= b2) {
        for (int s = 0; s < spec.group_size(j2); ++s)
          sum += n(off1 + (s >> (b2 - b1)), off2 + s);
      } else {
        for (int s = 0; s < spec.group_size(j1); ++s)
          sum += n(off1 + s, off2 + (s >> (b1 - b2)));
      }
      out(j1, j2) = sum;
    }
  }
  return out;
}

CMat embed_isometry(const SplitSpec& spec, const std::string& s) {
  int need = spec.max_b();
  if (static_cast<int>(s.size()) != need)
    throw std::invalid_argument("embed_isometry: s must have length max(b)");
  int bits = 0;
  for (char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument("embed_isometry: s must be binary");
    bits = (bits << 1) | (c - '0');
  }
  CMat v = CMat::Zero(spec.k, spec.d());
  for (int j = 0; j < spec.d(); ++j) {
    int prefix = spec.b[j] == 0 ? 0 : bits >> (need - spec.b[j]);
    v(spec.group_offset(j) + prefix, j) = 1.0;
  }
  return v;
}

int simulate_split_measurement(const CMat& rho, int t, const Rank1Povm& povm_on_split,
                               const SplitSpec& spec, Rng& rng) {
  if (povm_on_split.completeness_defect() > 1e-8)
    throw std::domain_error("simulate_split_measurement: POVM does not sum to identity");

  // One embedding string per copy, uniform over {0,1}^{max b}.
  int need = spec.max_b();
  std::vector<CMat> isometries(t);
  for (int i = 0; i < t; ++i) {
    std::string s(need, '0');
    for (int p = 0; p < need; ++p) s[p] = rng.uniform() < 0.5 ? '0' : '1';
    isometries[i] = embed_isometry(spec, s);
  }

  // Pull each element back: x_z = (V_1 (x) ... (x) V_t)^dagger z, then Born.
  std::vector<CMat> adjoints(t);
  for (int i = 0; i < t; ++i) adjoints[i] = isometries[i].adjoint();
  std::vector<CMat> rho_factors(t, rho);
  int d = static_cast<int>(rho.rows());

  RVec probs(povm_on_split.size());
  for (int z = 0; z < povm_on_split.size(); ++z) {
    CVec x = apply_factors(adjoints, povm_on_split.vectors[z], spec.k);
    CVec rx = apply_factors(rho_factors, x, d);
    probs[z] = povm_on_split.weights[z] * x.dot(rx).real();
  }
  return rng.categorical(probs);
}

}  // namespace swt
