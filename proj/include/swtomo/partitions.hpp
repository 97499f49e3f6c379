#pragma once

#include <string>
#include <vector>

namespace swt {

// Integer partition with strictly positive, non-increasing parts.  The
// canonical order used everywhere (tables, golden files) is descending
// lexicographic on the parts vector.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int total() const;
  int num_parts() const { return static_cast<int>(parts.size()); }
  int part(int i) const { return i < num_parts() ? parts[i] : 0; }

  bool operator==(const Partition& o) const { return parts == o.parts; }
  // Canonical descending-lexicographic order: a < b iff a comes after b.
  bool operator<(const Partition& o) const { return parts > o.parts; }

  std::string to_string() const;  // parts joined by '-', e.g. "2-1-1"
};

// All partitions of t with at most max_parts parts, in canonical order.
// Throws std::invalid_argument when t == 0 or max_parts == 0.
std::vector<Partition> enumerate_partitions(int t, int max_parts);

Partition transpose(const Partition& lam);

// count(lam) = product over i of (number of parts equal to i)!.
long long partition_count(const Partition& lam);

long long sum_squares(const Partition& lam);

// True iff every prefix sum of lam dominates that of mu (zero-padded).
// Throws std::domain_error when totals differ.
bool majorizes(const Partition& lam, const Partition& mu);

// Number of standard Young tableaux of shape lam (hook length formula,
// exact 128-bit intermediate arithmetic; valid for |lam| <= 20).
long long dim_syt(const Partition& lam);

// Number of semistandard Young tableaux of shape lam with entries in [d]
// (hook content formula); 0 when lam has more than d parts.
long long dim_ssyt(const Partition& lam, int d);

}  // namespace swt
