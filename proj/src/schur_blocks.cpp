#include "swtomo/schur_blocks.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace swt {

std::vector<Perm> all_permutations(int t) {
  Perm base(t);
  std::iota(base.begin(), base.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

Partition cycle_type(const Perm& pi) {
  int t = static_cast<int>(pi.size());
  std::vector<bool> seen(t, false);
  std::vector<int> lens;
  for (int i = 0; i < t; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = pi[j]) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return Partition(std::move(lens));
}

std::vector<long long> permutation_index_map(const Perm& pi, int d) {
  int t = static_cast<int>(pi.size());
  long long n = 1;
  for (int i = 0; i < t; ++i) n *= d;
  // Digits of the input index (mode 1 slowest); output mode k carries the
  // input digit at mode pi^{-1}(k), i.e. digit j of the input lands at mode pi(j).
  std::vector<long long> out(n);
  std::vector<int> digits(t);
  for (long long idx = 0; idx < n; ++idx) {
    long long rem = idx;
    for (int m = t - 1; m >= 0; --m) {
      digits[m] = static_cast<int>(rem % d);
      rem /= d;
    }
    long long target = 0;
    std::vector<int> out_digits(t);
    for (int j = 0; j < t; ++j) out_digits[pi[j]] = digits[j];
    for (int m = 0; m < t; ++m) target = target * d + out_digits[m];
    out[idx] = target;
  }
  return out;
}

RMat permutation_operator(const Perm& pi, int d) {
  std::vector<long long> map = permutation_index_map(pi, d);
  long long n = static_cast<long long>(map.size());
  RMat p = RMat::Zero(n, n);
  for (long long i = 0; i < n; ++i) p(map[i], i) = 1.0;
  return p;
}

namespace {

using Shape = std::vector<int>;

struct CharKey {
  Shape lam;
  Shape mu;
  bool operator<(const CharKey& o) const {
    return lam != o.lam ? lam < o.lam : mu < o.mu;
  }
};

// Murnaghan-Nakayama via beta-sets: with beta_i = lam_i + (L-1-i), removing a
// border strip of size k corresponds to replacing some beta_i by beta_i - k
// when that value is fresh and nonnegative; the strip height is the number of
// beta_j strictly between the old and new values.
long long mn_character(const Shape& lam, const Shape& mu, std::map<CharKey, long long>& memo) {
  if (mu.empty()) return lam.empty() ? 1 : 0;
  if (lam.empty()) return 0;
  auto it = memo.find({lam, mu});
  if (it != memo.end()) return it->second;

  int k = mu[0];
  Shape rest(mu.begin() + 1, mu.end());
  int rows = static_cast<int>(lam.size());
  std::vector<int> beta(rows);
  for (int i = 0; i < rows; ++i) beta[i] = lam[i] + (rows - 1 - i);

  long long total = 0;
  for (int i = 0; i < rows; ++i) {
    int target = beta[i] - k;
    if (target < 0) continue;
    bool fresh = true;
    int height = 0;
    for (int j = 0; j < rows; ++j) {
      if (beta[j] == target) fresh = false;
      if (beta[j] > target && beta[j] < beta[i]) ++height;
    }
    if (!fresh) continue;
    std::vector<int> next_beta = beta;
    next_beta[i] = target;
    std::sort(next_beta.rbegin(), next_beta.rend());
    Shape next;
    for (int j = 0; j < rows; ++j) {
      int part = next_beta[j] - (rows - 1 - j);
      if (part > 0) next.push_back(part);
    }
    long long sign = (height % 2 == 0) ? 1 : -1;
    total += sign * mn_character(next, rest, memo);
  }
  memo[{lam, mu}] = total;
  return total;
}

std::map<CharKey, long long>& character_memo() {
  static std::map<CharKey, long long> memo;
  return memo;
}
std::mutex& character_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

long long character(const Partition& lam, const Partition& cycle) {
  if (lam.total() != cycle.total())
    throw std::domain_error("character: |lam| must equal |cycle type|");
  std::lock_guard<std::mutex> lock(character_mutex());
  return mn_character(lam.parts, cycle.parts, character_memo());
}

RMat isotypic_projector(const Partition& lam, int d, int t) {
  if (lam.total() != t) throw std::invalid_argument("isotypic_projector: |lam| != t");
  long long fact = 1;
  for (int k = 2; k <= t; ++k) fact *= k;
  if (fact > 720) throw std::domain_error("isotypic_projector: t! > 720 exceeds resource limit");
  long long n = 1;
  for (int i = 0; i < t; ++i) {
    n *= d;
    if (n > 4096) throw std::domain_error("isotypic_projector: d^t > 4096 exceeds resource limit");
  }

  double scale = static_cast<double>(dim_syt(lam)) / static_cast<double>(fact);
  RMat proj = RMat::Zero(n, n);
  for (const Perm& pi : all_permutations(t)) {
    double chi = static_cast<double>(character(lam, cycle_type(pi)));
    if (chi == 0.0) continue;
    std::vector<long long> map = permutation_index_map(pi, d);
    for (long long col = 0; col < n; ++col) proj(map[col], col) += chi;
  }
  return scale * proj;
}

std::vector<long long> weight_basis_indices(std::span<const int> freq, int d, int t) {
  if (static_cast<int>(freq.size()) != d)
    throw std::invalid_argument("weight_basis_indices: freq length must equal d");
  int sum = 0;
  for (int f : freq) {
    if (f < 0) throw std::invalid_argument("weight_basis_indices: negative frequency");
    sum += f;
  }
  if (sum != t) throw std::invalid_argument("weight_basis_indices: frequencies must sum to t");
  long long n = 1;
  for (int i = 0; i < t; ++i) n *= d;
  std::vector<long long> out;
  std::vector<int> count(d);
  for (long long idx = 0; idx < n; ++idx) {
    std::fill(count.begin(), count.end(), 0);
    long long rem = idx;
    for (int m = 0; m < t; ++m) {
      ++count[rem % d];
      rem /= d;
    }
    if (std::equal(count.begin(), count.end(), freq.begin())) out.push_back(idx);
  }
  return out;
}

RMat weight_projector(std::span<const int> freq, int d, int t) {
  long long n = 1;
  for (int i = 0; i < t; ++i) n *= d;
  RMat w = RMat::Zero(n, n);
  for (long long idx : weight_basis_indices(freq, d, t)) w(idx, idx) = 1.0;
  return w;
}

SchurBlock highest_weight_block(const Partition& lam, int d, int t) {
  if (lam.num_parts() > d)
    throw std::domain_error("highest_weight_block: lam has more than d parts");
  SchurBlock block;
  block.lam = lam;
  block.d = d;
  block.t = t;
  block.dim_sp = dim_syt(lam);
  block.dim_v = dim_ssyt(lam, d);
  block.pi = isotypic_projector(lam, d, t);

  std::vector<int> freq(d, 0);
  for (int i = 0; i < lam.num_parts(); ++i) freq[i] = lam.parts[i];
  std::vector<long long> cols = weight_basis_indices(freq, d, t);

  long long n = block.pi.rows();
  RMat restricted(n, static_cast<long long>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) restricted.col(j) = block.pi.col(cols[j]);

  Eigen::BDCSVD<RMat> svd(restricted, Eigen::ComputeThinU);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > 1e-8) ++rank;
  if (rank != block.dim_sp)
    throw std::runtime_error("highest_weight_block: rank of Pi W differs from dim_syt");
  block.basis = svd.matrixU().leftCols(rank);
  block.m_block = block.basis * block.basis.transpose();
  return block;
}

bool weight_orthogonality_check(const Partition& lam, std::span<const int> freq, int d, int t) {
  std::vector<int> sorted(freq.begin(), freq.end());
  std::sort(sorted.rbegin(), sorted.rend());
  while (!sorted.empty() && sorted.back() == 0) sorted.pop_back();
  if (majorizes(lam, Partition(sorted))) return true;  // nothing to require
  RMat pi = isotypic_projector(lam, d, t);
  for (long long idx : weight_basis_indices(freq, d, t))
    if (pi.col(idx).norm() > 1e-9) return false;
  return true;
}

const SchurBlock& SchurCache::block(const Partition& lam) const {
  for (const SchurBlock& b : blocks_)
    if (b.lam == lam) return b;
  throw std::invalid_argument("SchurCache: unknown partition");
}

SchurCache::SchurCache(int d, int t) : d_(d), t_(t) {
  for (const Partition& lam : enumerate_partitions(t, d))
    blocks_.push_back(highest_weight_block(lam, d, t));
}

std::shared_ptr<const SchurCache> SchurCache::get(int d, int t) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const SchurCache>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(d, t);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto built = std::shared_ptr<const SchurCache>(new SchurCache(d, t));
  cache[key] = built;
  return built;
}

}  // namespace swt
