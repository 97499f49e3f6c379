#pragma once

#include <memory>

#include "swtomo/keyl.hpp"
#include "swtomo/povm.hpp"
#include "swtomo/rng.hpp"
#include "swtomo/splitting.hpp"
#include "swtomo/types.hpp"

namespace swt {

struct Batch {
  std::vector<CMat> factors;
  BatchState state() const;
};

// A measurable handle on t-entangled batches of some effective state.  Every
// batch is materialized as a product of per-copy factor states whose joint
// expectation equals (effective state)^{(x) t}, so Born sampling against the
// factors reproduces the exact outcome law.  Wrappers compose: mixtures swap
// factors against a known state, rotations conjugate them, splits embed them
// isometrically, and projector conditioning filters copies.
class StateSource {
 public:
  virtual ~StateSource() = default;
  virtual int dim() const = 0;
  virtual Batch make_batch(int t, Rng& rng) = 0;
  // Copies of the true underlying state consumed so far.
  virtual long long copies_consumed() const = 0;
};

class ExactSource final : public StateSource {
 public:
  explicit ExactSource(CMat rho);
  int dim() const override;
  Batch make_batch(int t, Rng& rng) override;
  long long copies_consumed() const override { return consumed_; }
  const CMat& rho() const { return rho_; }

 private:
  CMat rho_;
  long long consumed_ = 0;
};

// Presents lam * base + (1 - lam) * sigma by sampling the inclusion set S
// i.i.d. per copy; consumes base copies only for modes in S.
class MixtureSource final : public StateSource {
 public:
  MixtureSource(StateSource& base, CMat sigma, double lam);
  int dim() const override;
  Batch make_batch(int t, Rng& rng) override;
  long long copies_consumed() const override { return base_.copies_consumed(); }

 private:
  StateSource& base_;
  CMat sigma_;
  double lam_;
};

// Presents U^dagger rho U (free classical relabeling of the POVM).
class RotatedSource final : public StateSource {
 public:
  RotatedSource(StateSource& base, CMat u);
  int dim() const override;
  Batch make_batch(int t, Rng& rng) override;
  long long copies_consumed() const override { return base_.copies_consumed(); }

 private:
  StateSource& base_;
  CMat u_;
};

// Presents split(rho): each copy is embedded through an independent uniform
// isometry V_s.
class SplitSource final : public StateSource {
 public:
  SplitSource(StateSource& base, SplitSpec spec);
  int dim() const override;
  Batch make_batch(int t, Rng& rng) override;
  long long copies_consumed() const override { return base_.copies_consumed(); }
  const SplitSpec& spec() const { return spec_; }

 private:
  StateSource& base_;
  SplitSpec spec_;
  std::vector<CMat> isometries_;  // one per bitstring, precomputed
};

// Measures every copy of a base batch with (P, I-P) and keeps batches with at
// least t' successes, presenting P rho P / tr(P rho P).
class ConditionedSource final : public StateSource {
 public:
  ConditionedSource(StateSource& base, CMat projector, int base_t);
  int dim() const override;
  Batch make_batch(int t_prime, Rng& rng) override;
  long long copies_consumed() const override { return base_.copies_consumed(); }
  long long discarded_batches() const { return discarded_; }

 private:
  StateSource& base_;
  CMat p_;
  int base_t_;
  long long discarded_ = 0;
};

// Born sampling of a rank-1 POVM against a batch.
int measure_rank1(const Batch& batch, const Rank1Povm& povm, Rng& rng);

// Two-outcome projective measurement (P, I-P) on a single factor; returns
// true on the P outcome and optionally the post-measurement state.
bool measure_two_outcome(const CMat& factor, const CMat& p, Rng& rng, CMat* post = nullptr);

// Keyl measurement of one t-batch drawn from the source.
KeylOutcome measure_keyl(StateSource& source, int t, Rng& rng, const KeylConfig& config = {},
                         SamplerStats* stats = nullptr);

}  // namespace swt
