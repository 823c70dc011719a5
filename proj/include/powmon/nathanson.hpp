#ifndef POWMON_NATHANSON_HPP
#define POWMON_NATHANSON_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "powmon/natset.hpp"

namespace powmon {

/// Eventual shape of the k-fold sums of a gcd-1 set A:
///
///   kA = B u [b, ka - c] u (ka - C)        for every k >= k_star,
///
/// with a = max A and n = |A| - 1. The pair (b, B) is canonical: b is
/// Frobenius(<A>) + 1 and B the members of <A> below b - 1, so it is the
/// unique eventually-stable choice with minimal b; (c, C) likewise from
/// <max A - A>. k_star is certified by checking the identity at every
/// k in [k_star, a^2 n]; Nathanson's theorem covers all larger k.
struct NathansonStructure {
  Elem a = 1;
  std::size_t n = 1;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::vector<Elem> B;
  std::vector<Elem> C;
  std::uint64_t k_star = 0;
  std::int64_t bound_a2n = 0;  // a^2 n
  std::int64_t bound_gw = 0;   // a - n + 1

  friend bool operator==(const NathansonStructure&,
                         const NathansonStructure&) = default;
};

/// Computes the canonical structure of A. Requires gcd_of(A) = 1 (which
/// rules out A = {0}, whose gcd is 0). Throws VerificationError if the
/// decomposition fails at k = a^2 n, which the theorem excludes.
NathansonStructure canonical_structure(const NatSet& a);

/// The middle interval [b, ka - c] of the decomposition at k; empty when
/// ka - c < b.
Interval middle_interval(const NathansonStructure& s, std::uint64_t k);

/// The reconstruction B u [b, ka - c] u (ka - C) as a sorted integer set;
/// nullopt when it contains a value outside [0, ka] (no subset of N can
/// match it then). The middle interval is empty when ka - c < b.
std::optional<std::vector<Elem>> decomposition_set(const NathansonStructure& s,
                                                   std::uint64_t k);

/// True iff kfold(A, k) equals the reconstruction at k.
bool verify_decomposition(const NatSet& a, std::uint64_t k,
                          const NathansonStructure& s);

struct ScanRow {
  NatSet set;
  NathansonStructure structure;
  bool gw_ok = true;  // k_star <= a - n + 1
};

/// Visits every A with 0 in A, max A <= max_a, gcd 1 in a fixed order:
/// max ascending, then the subset of [1, max-1] by ascending bitmask.
/// Rows are emitted sequentially in that order.
void bound_scan(Elem max_a, const std::function<void(const ScanRow&)>& emit);

}  // namespace powmon

#endif
