#pragma once

#include <span>

#include "swtomo/partitions.hpp"
#include "swtomo/rng.hpp"

namespace swt {

// Shape of the insertion tableau under Schensted row insertion (weakly
// increasing rows).  Symbols may be any integers; only their order matters.
// Throws std::invalid_argument on an empty sequence.
Partition rsk_shape(std::span<const int> sequence);

// Draw t i.i.d. symbols from alpha and return rsk_shape; the law of the
// result is sw_pmf(t, d, alpha).
Partition sample_sw(int t, int d, const RVec& alpha, Rng& rng);

}  // namespace swt
