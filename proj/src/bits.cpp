#include "bits.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace powmon::detail {

Bits to_bits(const NatSet& s) {
  Bits b(s.max() + 1);
  for (Elem e : s.elements()) b.set(e);
  return b;
}

NatSet to_natset(const Bits& b) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < b.w.size(); ++i) {
    std::uint64_t w = b.w[i];
    while (w) {
      out.push_back((Elem(i) << 6) + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return NatSet::from_sorted(std::move(out));
}

std::vector<Run> runs_of(const Bits& b) {
  std::vector<Run> out;
  bool open = false;
  Elem start = 0;
  for (std::size_t i = 0; i < b.w.size(); ++i) {
    const std::uint64_t w = b.w[i];
    if (open ? w == ~std::uint64_t{0} : w == 0) continue;
    const Elem base = Elem(i) << 6;
    unsigned pos = 0;
    while (pos < 64) {
      if (open) {
        const std::uint64_t t = ~w >> pos;
        if (t == 0) break;  // run continues into the next word
        const unsigned z = pos + unsigned(std::countr_zero(t));
        out.push_back({start, base + z - 1 - start});
        open = false;
        pos = z;
      } else {
        const std::uint64_t t = w >> pos;
        if (t == 0) break;
        const unsigned o = pos + unsigned(std::countr_zero(t));
        start = base + o;
        open = true;
        pos = o;
      }
    }
  }
  if (open) out.push_back({start, b.nbits - 1 - start});
  return out;
}

void or_shifted(Bits& dst, const Bits& src, Elem shift) {
  const std::size_t wo = std::size_t(shift >> 6);
  const unsigned bo = unsigned(shift & 63);
  const std::size_t nd = dst.w.size();
  const std::size_t ns = src.w.size();
  if (bo == 0) {
    for (std::size_t i = 0, j = wo; i < ns && j < nd; ++i, ++j)
      dst.w[j] |= src.w[i];
  } else {
    for (std::size_t i = 0, j = wo; i < ns && j < nd; ++i, ++j) {
      const std::uint64_t w = src.w[i];
      dst.w[j] |= w << bo;
      if (j + 1 < nd) dst.w[j + 1] |= w >> (64 - bo);
    }
  }
#ifndef NDEBUG
  const std::size_t first_clipped = nd > wo ? nd - wo : 0;
  for (std::size_t i = first_clipped; i < ns; ++i)
    assert(src.w[i] == 0 && "or_shifted clipped live bits");
  if (bo != 0 && first_clipped > 0 && first_clipped - 1 < ns)
    assert((src.w[first_clipped - 1] >> (64 - bo)) == 0 &&
           "or_shifted clipped live bits");
#endif
}

void self_or_shift(Bits& b, Elem s) {
  const std::size_t wo = std::size_t(s >> 6);
  const unsigned bo = unsigned(s & 63);
  const std::size_t n = b.w.size();
  if (wo >= n) return;
  if (bo == 0) {
    for (std::size_t j = n; j-- > wo;) b.w[j] |= b.w[j - wo];
  } else {
    for (std::size_t j = n; j-- > wo;) {
      std::uint64_t v = b.w[j - wo] << bo;
      if (j - wo > 0) v |= b.w[j - wo - 1] >> (64 - bo);
      b.w[j] |= v;
    }
  }
}

Bits add(const Bits& x, const Bits& y) {
  std::vector<Run> rx = runs_of(x);
  std::vector<Run> ry = runs_of(y);
  const bool x_outer = rx.size() <= ry.size();
  const Bits& t = x_outer ? y : x;
  std::vector<Run>& rs = x_outer ? rx : ry;

  // Ascending run lengths let one buffer be smeared incrementally:
  // smear(T, L2) = smear(smear(T, L1), L2 - L1) for L1 <= L2.
  std::sort(rs.begin(), rs.end(), [](const Run& a, const Run& b) {
    return a.len != b.len ? a.len < b.len : a.lo < b.lo;
  });

  Bits out(x.nbits + y.nbits - 1);
  Bits cur(t.nbits + rs.back().len);
  std::copy(t.w.begin(), t.w.end(), cur.w.begin());
  Elem smeared = 0;
  for (const Run& r : rs) {
    while (smeared < r.len) {
      const Elem step = std::min(smeared + 1, r.len - smeared);
      self_or_shift(cur, step);
      smeared += step;
    }
    or_shifted(out, cur, r.lo);
  }
  return out;
}

}  // namespace powmon::detail
