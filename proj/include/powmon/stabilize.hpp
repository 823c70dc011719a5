#ifndef POWMON_STABILIZE_HPP
#define POWMON_STABILIZE_HPP

#include <cstdint>

#include "powmon/qset.hpp"

namespace powmon {

/// Witness that the increments of the k-fold sums of `input` stabilize:
/// (k+1)A = kA + {0, max A} holds for every k in [h_min, h_min + window],
/// and fails at h_min - 1 whenever h_min > 0. `threshold` is the bound
/// max{k_star, ceil(1 + (b+c)/a)} computed on the gcd-normalized integer
/// model, above which the identity is guaranteed.
struct StabilizationReport {
  QSet input;
  std::uint64_t h_min = 0;
  std::uint64_t threshold = 0;
  std::uint64_t window = 0;
};

/// Finds the least h such that the identity holds on [h, h + window].
/// The degenerate input {0} succeeds at h = 0 (every k-fold sum is {0}).
/// Throws std::logic_error if the identity fails at or past the
/// threshold, which the stabilization guarantee excludes.
StabilizationReport stabilization_onset(const QSet& a, std::uint64_t window = 50);

}  // namespace powmon

#endif
