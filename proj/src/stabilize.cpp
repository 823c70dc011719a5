#include "powmon/stabilize.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>
#include <stdexcept>

#include "bits.hpp"
#include "powmon/error.hpp"
#include "powmon/nathanson.hpp"

namespace powmon {

namespace {

using detail::Bits;

std::size_t words_for(Elem bits) { return std::size_t((bits + 63) / 64); }

}  // namespace

StabilizationReport stabilization_onset(const QSet& a_set,
                                        std::uint64_t window) {
  if (window == 0)
    throw std::invalid_argument("stabilization_onset: window must be >= 1");
  StabilizationReport rep;
  rep.input = a_set;
  rep.window = window;
  // The identity is invariant under dilation, so everything runs on the
  // integer model; {0} is the degenerate success.
  const NatSet& num = a_set.num();
  if (num.max() == 0) return rep;

  const NatSet normalized = divide_exact(num, gcd_of(num));
  const NathansonStructure s = canonical_structure(normalized);
  const std::uint64_t tail =
      1 + std::uint64_t((s.b + s.c + std::int64_t(s.a) - 1) / std::int64_t(s.a));
  rep.threshold = std::max(s.k_star, tail);

  // ok[k] <=> (k+1)A = kA + {0, max A}. Walk kA once; the right-hand side
  // is kA | (kA << max), compared word-for-word against (k+1)A.
  const std::uint64_t top = rep.threshold + window;
  const Elem max_e = num.max();
  const unsigned __int128 universe =
      (unsigned __int128)(max_e) * (top + 1) + 1;
  if (universe > detail::kUniverseBitLimit)
    throw std::length_error(
        "stabilization_onset: set universe guard exceeded (2^31 bits)");

  const Bits a_bits = detail::to_bits(num);
  std::vector<char> ok(top + 1, 0);
  Bits cur(1);
  Bits rhs{Elem(universe)};
  cur.set(0);
  std::int64_t last_fail = -1;
  for (std::uint64_t k = 0; k <= top; ++k) {
    const std::size_t live = words_for((k + 1) * max_e + 1);
    std::fill(rhs.w.begin(), rhs.w.begin() + live, 0);
    detail::or_shifted(rhs, cur, 0);
    detail::or_shifted(rhs, cur, max_e);
    Bits nxt = detail::add(cur, a_bits);  // exact size (k+1)*max + 1
    ok[k] = std::memcmp(nxt.w.data(), rhs.w.data(), live * 8) == 0;
    if (!ok[k]) last_fail = std::int64_t(k);
    cur = std::move(nxt);
  }
  if (last_fail >= std::int64_t(rep.threshold))
    throw VerificationError(
        "stabilization_onset: identity failed at k = " +
        std::to_string(last_fail) + " >= threshold " +
        std::to_string(rep.threshold) + ", contradicting stabilization");

  // Least h whose whole window [h, h + window] is clean.
  std::uint64_t next_fail_after = top + 1;
  std::vector<std::uint64_t> next_fail(top + 2, top + 1);
  for (std::uint64_t k = top + 1; k-- > 0;) {
    if (!ok[k]) next_fail_after = k;
    next_fail[k] = next_fail_after;
  }
  for (std::uint64_t h = 0;; ++h) {
    assert(h <= rep.threshold);
    if (next_fail[h] > h + window) {
      rep.h_min = h;
      break;
    }
  }
  assert(rep.h_min == 0 || !ok[rep.h_min - 1]);
  return rep;
}

}  // namespace powmon
