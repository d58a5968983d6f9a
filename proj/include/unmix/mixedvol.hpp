#pragma once

#include "unmix/support.hpp"
#include "unmix/triangulate.hpp"

namespace unmix {

/// Deduplicated pairwise sums. Above the pruning threshold the sum is
/// reduced to its hull vertices (volume downstream is unaffected).
inline constexpr size_t kMinkowskiPruneThreshold = 5000;
Support minkowski_sum(const Support& a, const Support& b);

struct MixedVolumeOptions {
  int dim_cap = 10;  // inclusion-exclusion enumerates 2^n - 1 subsets
  Exec exec = Exec::Parallel;
};

/// Independent mixed-volume oracle by inclusion-exclusion over Minkowski
/// subset sums, in the normalization where the unmixed case returns
/// n! vol. Deliberately separate from the certified fast path it checks.
Rat mixed_volume(const SupportSystem& sys, uint64_t seed,
                 const MixedVolumeOptions& opts = {});

}  // namespace unmix
