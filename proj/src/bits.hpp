#ifndef POWMON_BITS_HPP
#define POWMON_BITS_HPP

// Internal bit-vector backend for sumsets. Not installed.

#include <cstdint>
#include <vector>

#include "powmon/natset.hpp"

namespace powmon::detail {

// Hard cap on the bit universe of any one set; guards kfold/sumset calls
// whose result would not fit in memory.
inline constexpr Elem kUniverseBitLimit = Elem{1} << 31;

// Dense bit vector over [0, nbits). Bit i set <=> i is in the set. Words
// beyond the last valid bit are kept zero.
struct Bits {
  std::vector<std::uint64_t> w;
  Elem nbits = 0;

  Bits() = default;
  explicit Bits(Elem n) : w((n + 63) / 64, 0), nbits(n) {}

  bool test(Elem i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
  void set(Elem i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
};

// Maximal run of consecutive members: covers [lo, lo + len].
struct Run {
  Elem lo = 0;
  Elem len = 0;
};

Bits to_bits(const NatSet& s);
NatSet to_natset(const Bits& b);
std::vector<Run> runs_of(const Bits& b);

// dst |= src << shift. Clips at dst capacity; clipped source content must
// be zero (callers size dst so that live bits always fit).
void or_shifted(Bits& dst, const Bits& src, Elem shift);

// b |= b << s, in place.
void self_or_shift(Bits& b, Elem s);

// Setwise sum as a run-compressed shifted-OR convolution: the side with
// fewer runs contributes shift intervals, the other side is smeared by
// each interval length (incrementally, ascending) and OR-ed in.
Bits add(const Bits& x, const Bits& y);

}  // namespace powmon::detail

#endif
