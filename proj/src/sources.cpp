#include "swtomo/sources.hpp"

#include <stdexcept>

#include "swtomo/density.hpp"
#include "swtomo/tensor_ops.hpp"

namespace swt {

BatchState Batch::state() const {
  BatchState s;
  s.factors = factors;
  return s;
}

ExactSource::ExactSource(CMat rho) : rho_(std::move(rho)) {
  if (!is_density(rho_, 1e-8)) throw std::invalid_argument("ExactSource: not a density matrix");
}

int ExactSource::dim() const { return static_cast<int>(rho_.rows()); }

Batch ExactSource::make_batch(int t, Rng&) {
  consumed_ += t;
  Batch b;
  b.factors.assign(t, rho_);
  return b;
}

MixtureSource::MixtureSource(StateSource& base, CMat sigma, double lam)
    : base_(base), sigma_(std::move(sigma)), lam_(lam) {
  if (lam < 0.0 || lam > 1.0) throw std::invalid_argument("MixtureSource: lam must be in [0,1]");
  if (sigma_.rows() != base.dim()) throw std::invalid_argument("MixtureSource: dim mismatch");
}

int MixtureSource::dim() const { return base_.dim(); }

Batch MixtureSource::make_batch(int t, Rng& rng) {
  std::vector<bool> in_s(t);
  int n_base = 0;
  for (int i = 0; i < t; ++i) {
    in_s[i] = rng.uniform() < lam_;
    if (in_s[i]) ++n_base;
  }
  Batch sub;
  if (n_base > 0) sub = base_.make_batch(n_base, rng);
  Batch out;
  out.factors.resize(t);
  int next = 0;
  for (int i = 0; i < t; ++i) out.factors[i] = in_s[i] ? sub.factors[next++] : sigma_;
  return out;
}

RotatedSource::RotatedSource(StateSource& base, CMat u) : base_(base), u_(std::move(u)) {
  if (u_.rows() != base.dim()) throw std::invalid_argument("RotatedSource: dim mismatch");
}

int RotatedSource::dim() const { return base_.dim(); }

Batch RotatedSource::make_batch(int t, Rng& rng) {
  Batch b = base_.make_batch(t, rng);
  for (CMat& f : b.factors) f = u_.adjoint() * f * u_;
  return b;
}

SplitSource::SplitSource(StateSource& base, SplitSpec spec) : base_(base), spec_(std::move(spec)) {
  if (spec_.d() != base.dim()) throw std::invalid_argument("SplitSource: dim mismatch");
  int need = spec_.max_b();
  int count = 1 << need;
  for (int bits = 0; bits < count; ++bits) {
    std::string s(need, '0');
    for (int p = 0; p < need; ++p)
      if (bits & (1 << (need - 1 - p))) s[p] = '1';
    isometries_.push_back(embed_isometry(spec_, s));
  }
}

int SplitSource::dim() const { return spec_.k; }

Batch SplitSource::make_batch(int t, Rng& rng) {
  Batch b = base_.make_batch(t, rng);
  for (CMat& f : b.factors) {
    const CMat& v = isometries_[rng.uniform_int(static_cast<int>(isometries_.size()))];
    f = v * f * v.adjoint();
  }
  return b;
}

ConditionedSource::ConditionedSource(StateSource& base, CMat projector, int base_t)
    : base_(base), p_(std::move(projector)), base_t_(base_t) {
  if (p_.rows() != base.dim()) throw std::invalid_argument("ConditionedSource: dim mismatch");
}

int ConditionedSource::dim() const { return base_.dim(); }

Batch ConditionedSource::make_batch(int t_prime, Rng& rng) {
  if (t_prime > base_t_)
    throw std::invalid_argument("ConditionedSource: t' exceeds the base batch size");
  for (;;) {
    Batch raw = base_.make_batch(base_t_, rng);
    Batch out;
    for (const CMat& f : raw.factors) {
      CMat post;
      if (measure_two_outcome(f, p_, rng, &post)) out.factors.push_back(post);
      if (static_cast<int>(out.factors.size()) == t_prime) return out;
    }
    ++discarded_;
  }
}

int measure_rank1(const Batch& batch, const Rank1Povm& povm, Rng& rng) {
  BatchState state = batch.state();
  RVec probs(povm.size());
  for (int z = 0; z < povm.size(); ++z) {
    const CVec& v = povm.vectors[z];
    probs[z] = povm.weights[z] * v.dot(state.apply(v)).real();
  }
  return rng.categorical(probs);
}

bool measure_two_outcome(const CMat& factor, const CMat& p, Rng& rng, CMat* post) {
  CMat pfp = p * factor * p;
  double beta = pfp.trace().real();
  double total = factor.trace().real();
  bool success = rng.uniform() * total < beta;
  if (post) {
    if (success) {
      *post = beta > 0.0 ? CMat(pfp / beta) : pfp;
    } else {
      CMat q = CMat::Identity(p.rows(), p.cols()) - p;
      CMat qfq = q * factor * q;
      double rest = qfq.trace().real();
      *post = rest > 0.0 ? CMat(qfq / rest) : qfq;
    }
  }
  return success;
}

KeylOutcome measure_keyl(StateSource& source, int t, Rng& rng, const KeylConfig& config,
                         SamplerStats* stats) {
  auto cache = SchurCache::get(source.dim(), t);
  Batch batch = source.make_batch(t, rng);
  return sample_keyl_batch(batch.state(), *cache, rng, config, stats);
}

}  // namespace swt
