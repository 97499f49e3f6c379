#include "swtomo/rng.hpp"

#include <stdexcept>

namespace swt {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
}

std::uint64_t Rng::splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::string path)
    : seed_(seed), path_(std::move(path)), engine_(splitmix64(seed)) {}

Rng Rng::substream(std::uint64_t tag) const {
  std::uint64_t child = splitmix64(seed_ ^ (kGolden * (tag + 1)));
  std::string child_path = path_.empty() ? std::to_string(tag) : path_ + "/" + std::to_string(tag);
  return Rng(child, std::move(child_path));
}

double Rng::uniform() {
  return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
}

double Rng::normal() {
  return std::normal_distribution<double>(0.0, 1.0)(engine_);
}

int Rng::categorical(const RVec& probs) {
  double total = 0.0;
  for (int i = 0; i < probs.size(); ++i) total += std::max(0.0, probs[i]);
  if (!(total > 0.0)) throw std::domain_error("categorical: probabilities sum to zero");
  double u = uniform() * total;
  double acc = 0.0;
  for (int i = 0; i < probs.size(); ++i) {
    acc += std::max(0.0, probs[i]);
    if (u < acc) return i;
  }
  return static_cast<int>(probs.size()) - 1;
}

int Rng::uniform_int(int n) {
  return std::uniform_int_distribution<int>(0, n - 1)(engine_);
}

}  // namespace swt
