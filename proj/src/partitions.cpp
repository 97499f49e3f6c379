#include "swtomo/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace swt {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("Partition: parts must be non-increasing");
  }
}

int Partition::total() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += '-';
    s += std::to_string(parts[i]);
  }
  return s;
}

namespace {

void enumerate_rec(int remaining, int max_part, int slots, std::vector<int>& cur,
                   std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (slots == 0) return;
  // Largest feasible first gives descending lexicographic order directly.
  int lo = (remaining + slots - 1) / slots;
  for (int p = std::min(remaining, max_part); p >= lo; --p) {
    cur.push_back(p);
    enumerate_rec(remaining - p, p, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int t, int max_parts) {
  if (t <= 0 || max_parts <= 0)
    throw std::invalid_argument("enumerate_partitions: t and max_parts must be positive");
  std::vector<Partition> out;
  std::vector<int> cur;
  enumerate_rec(t, t, max_parts, cur, out);
  return out;
}

Partition transpose(const Partition& lam) {
  std::vector<int> tp;
  if (lam.parts.empty()) return Partition{};
  tp.resize(lam.parts[0], 0);
  for (int p : lam.parts)
    for (int j = 0; j < p; ++j) ++tp[j];
  return Partition(std::move(tp));
}

long long partition_count(const Partition& lam) {
  long long result = 1;
  int run = 1;
  for (std::size_t i = 1; i <= lam.parts.size(); ++i) {
    if (i < lam.parts.size() && lam.parts[i] == lam.parts[i - 1]) {
      ++run;
    } else {
      for (int k = 2; k <= run; ++k) result *= k;
      run = 1;
    }
  }
  return result;
}

long long sum_squares(const Partition& lam) {
  long long s = 0;
  for (int p : lam.parts) s += static_cast<long long>(p) * p;
  return s;
}

bool majorizes(const Partition& lam, const Partition& mu) {
  if (lam.total() != mu.total())
    throw std::domain_error("majorizes: partitions must have equal totals");
  int n = std::max(lam.num_parts(), mu.num_parts());
  long long a = 0, b = 0;
  for (int i = 0; i < n; ++i) {
    a += lam.part(i);
    b += mu.part(i);
    if (a < b) return false;
  }
  return true;
}

namespace {

// Hook length of box (i, j) in shape lam (0-based), given the transpose.
int hook_length(const Partition& lam, const Partition& lam_t, int i, int j) {
  return (lam.parts[i] - j) + (lam_t.parts[j] - i) - 1;
}

}  // namespace

long long dim_syt(const Partition& lam) {
  if (lam.parts.empty()) return 1;
  int n = lam.total();
  if (n > 20) throw std::domain_error("dim_syt: |lam| > 20 exceeds exact-arithmetic range");
  Partition lam_t = transpose(lam);
  unsigned __int128 num = 1;
  for (int k = 2; k <= n; ++k) num *= static_cast<unsigned>(k);
  unsigned __int128 den = 1;
  for (int i = 0; i < lam.num_parts(); ++i)
    for (int j = 0; j < lam.parts[i]; ++j)
      den *= static_cast<unsigned>(hook_length(lam, lam_t, i, j));
  return static_cast<long long>(num / den);
}

long long dim_ssyt(const Partition& lam, int d) {
  if (d <= 0) throw std::invalid_argument("dim_ssyt: d must be positive");
  if (lam.num_parts() > d) return 0;
  if (lam.parts.empty()) return 1;
  if (lam.total() > 20) throw std::domain_error("dim_ssyt: |lam| > 20 exceeds exact-arithmetic range");
  Partition lam_t = transpose(lam);
  unsigned __int128 num = 1, den = 1;
  for (int i = 0; i < lam.num_parts(); ++i) {
    for (int j = 0; j < lam.parts[i]; ++j) {
      num *= static_cast<unsigned>(d + j - i);
      den *= static_cast<unsigned>(hook_length(lam, lam_t, i, j));
    }
  }
  return static_cast<long long>(num / den);
}

}  // namespace swt
