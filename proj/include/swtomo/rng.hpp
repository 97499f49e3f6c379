#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>

#include "swtomo/types.hpp"

namespace swt {

// Deterministic RNG with explicit substreams.  A child stream's seed is
// splitmix64(parent_seed ^ (GOLDEN * (tag + 1))); the rule is documented in
// the README and recorded in run manifests so that concurrent trials are
// reproducible from a single master seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::string path = "");

  std::uint64_t seed() const { return seed_; }
  const std::string& path() const { return path_; }

  Rng substream(std::uint64_t tag) const;

  std::mt19937_64& engine() { return engine_; }

  // Uniform in [0, 1).
  double uniform();
  double normal();
  // Index sampled proportionally to probs (entries clamped at 0).
  int categorical(const RVec& probs);
  // Uniform integer in [0, n).
  int uniform_int(int n);

  static std::uint64_t splitmix64(std::uint64_t x);

 private:
  std::uint64_t seed_;
  std::string path_;
  std::mt19937_64 engine_;
};

}  // namespace swt
