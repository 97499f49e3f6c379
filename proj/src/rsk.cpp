#include "swtomo/rsk.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace swt {

Partition rsk_shape(std::span<const int> sequence) {
  if (sequence.empty()) throw std::invalid_argument("rsk_shape: empty sequence");
  std::vector<std::vector<int>> rows;
  for (int x : sequence) {
    int cur = x;
    for (std::size_t r = 0;; ++r) {
      if (r == rows.size()) {
        rows.push_back({cur});
        break;
      }
      // Bump the leftmost entry strictly greater than cur.
      auto& row = rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), cur);
      if (it == row.end()) {
        row.push_back(cur);
        break;
      }
      std::swap(*it, cur);
    }
  }
  std::vector<int> shape;
  shape.reserve(rows.size());
  for (const auto& row : rows) shape.push_back(static_cast<int>(row.size()));
  return Partition(std::move(shape));
}

Partition sample_sw(int t, int d, const RVec& alpha, Rng& rng) {
  if (alpha.size() != d) throw std::invalid_argument("sample_sw: alpha length must equal d");
  std::vector<int> seq(t);
  for (int i = 0; i < t; ++i) seq[i] = rng.categorical(alpha);
  return rsk_shape(seq);
}

}  // namespace swt
