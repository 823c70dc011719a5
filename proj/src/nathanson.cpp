#include "powmon/nathanson.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <string>

#include "bits.hpp"
#include "powmon/error.hpp"
#include "powmon/numsgp.hpp"

namespace powmon {

namespace {

using detail::Bits;
using detail::Run;

std::size_t words_for(Elem bits) { return std::size_t((bits + 63) / 64); }

void set_range(Bits& b, Elem lo, Elem hi) {
  const std::size_t wl = std::size_t(lo >> 6), wh = std::size_t(hi >> 6);
  const std::uint64_t ml = ~std::uint64_t{0} << (lo & 63);
  const std::uint64_t mh = ~std::uint64_t{0} >> (63 - (hi & 63));
  if (wl == wh) {
    b.w[wl] |= ml & mh;
    return;
  }
  b.w[wl] |= ml;
  for (std::size_t i = wl + 1; i < wh; ++i) b.w[i] = ~std::uint64_t{0};
  b.w[wh] |= mh;
}

// Rebuilds the expected decomposition of kA into `want` and compares with
// the live bits in `cur` (whose words beyond ka are zero by construction).
bool matches_at(const Bits& cur, Bits& want, const NathansonStructure& s,
                std::uint64_t k) {
  const Elem ka = Elem(k) * s.a;
  if (!s.B.empty() && s.B.back() > ka) return false;
  if (!s.C.empty() && s.C.back() > ka) return false;  // ka - C dips below 0
  const std::size_t nw = words_for(ka + 1);
  std::fill(want.w.begin(), want.w.begin() + nw, 0);
  for (Elem e : s.B) want.set(e);
  const Interval mid = middle_interval(s, k);
  if (!mid.empty()) set_range(want, Elem(mid.lo), Elem(mid.hi));
  for (Elem x : s.C) want.set(ka - x);
  return std::memcmp(want.w.data(), cur.w.data(), nw * 8) == 0;
}

}  // namespace

NathansonStructure canonical_structure(const NatSet& a_set) {
  if (gcd_of(a_set) != 1)
    throw std::invalid_argument(
        "canonical_structure: set must have gcd 1 (gcd{0} = 0)");

  NathansonStructure s;
  s.a = a_set.max();
  s.n = a_set.size() - 1;
  const unsigned __int128 a2n =
      (unsigned __int128)(s.a) * s.a * s.n;
  if (a2n * s.a + 1 > detail::kUniverseBitLimit)
    throw std::length_error(
        "canonical_structure: set universe guard exceeded (2^31 bits)");
  s.bound_a2n = std::int64_t(a2n);
  s.bound_gw = std::int64_t(s.a) - std::int64_t(s.n) + 1;

  const NumericalMonoid low = NumericalMonoid::generated_by_set(a_set);
  const NumericalMonoid high =
      NumericalMonoid::generated_by_set(reflect(a_set));
  s.b = low.frobenius() + 1;
  s.c = high.frobenius() + 1;
  for (std::int64_t i = 0; i <= s.b - 2; ++i)
    if (low.contains(Elem(i))) s.B.push_back(Elem(i));
  for (std::int64_t i = 0; i <= s.c - 2; ++i)
    if (high.contains(Elem(i))) s.C.push_back(Elem(i));

  // Certify k_star by walking kA for k = 0..a^2 n and recording the last
  // k where the decomposition differs. Two ping-pong buffers hold kA and
  // (k+1)A; the step is a run-smeared shifted-OR by A.
  const Elem universe = s.a * Elem(s.bound_a2n) + 1;

  std::vector<Run> a_runs = detail::runs_of(detail::to_bits(a_set));
  std::sort(a_runs.begin(), a_runs.end(), [](const Run& x, const Run& y) {
    return x.len != y.len ? x.len < y.len : x.lo < y.lo;
  });

  Bits cur(universe), nxt(universe), want(universe);
  cur.set(0);
  std::int64_t last_fail = -1;
  for (std::uint64_t k = 0;; ++k) {
    if (!matches_at(cur, want, s, k)) last_fail = std::int64_t(k);
    if (std::int64_t(k) == s.bound_a2n) break;
    const std::size_t live = words_for((k + 1) * s.a + 1);
    std::fill(nxt.w.begin(), nxt.w.begin() + live, 0);
    Elem smeared = 0;
    for (const Run& r : a_runs) {
      while (smeared < r.len) {
        const Elem step = std::min(smeared + 1, r.len - smeared);
        detail::self_or_shift(cur, step);
        smeared += step;
      }
      detail::or_shifted(nxt, cur, r.lo);
    }
    std::swap(cur, nxt);
  }
  if (last_fail == s.bound_a2n)
    throw VerificationError(
        "canonical_structure: decomposition failed at the a^2 n bound");
  s.k_star = std::uint64_t(last_fail + 1);
  return s;
}

namespace {

Elem checked_ka(const NathansonStructure& s, std::uint64_t k,
                const char* op) {
  const unsigned __int128 ka = (unsigned __int128)(k) * s.a;
  if (ka >= detail::kUniverseBitLimit)
    throw std::length_error(std::string(op) +
                            ": set universe guard exceeded (2^31 bits)");
  return Elem(ka);
}

}  // namespace

Interval middle_interval(const NathansonStructure& s, std::uint64_t k) {
  return Interval{s.b,
                  std::int64_t(checked_ka(s, k, "middle_interval")) - s.c};
}

std::optional<std::vector<Elem>> decomposition_set(const NathansonStructure& s,
                                                   std::uint64_t k) {
  const Elem ka = checked_ka(s, k, "decomposition_set");
  if (!s.B.empty() && s.B.back() > ka) return std::nullopt;
  if (!s.C.empty() && s.C.back() > ka) return std::nullopt;
  std::vector<Elem> out(s.B);
  const Interval mid = middle_interval(s, k);
  for (std::int64_t v = mid.lo; v <= mid.hi; ++v) out.push_back(Elem(v));
  for (Elem x : s.C) out.push_back(ka - x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool verify_decomposition(const NatSet& a_set, std::uint64_t k,
                          const NathansonStructure& s) {
  const auto want = decomposition_set(s, k);
  if (!want) return false;
  return kfold(a_set, k).elements() == *want;
}

void bound_scan(Elem max_a, const std::function<void(const ScanRow&)>& emit) {
  if (max_a == 0) throw std::invalid_argument("bound_scan: max_a must be >= 1");
  if (max_a > 62)
    throw std::length_error("bound_scan: max_a guard (62) exceeded");
  for (Elem a = 1; a <= max_a; ++a) {
    const std::uint64_t masks = std::uint64_t{1} << (a - 1);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      std::vector<Elem> elems{0};
      for (Elem i = 1; i < a; ++i)
        if (mask & (std::uint64_t{1} << (i - 1))) elems.push_back(i);
      elems.push_back(a);
      NatSet set = NatSet::from_sorted(std::move(elems));
      if (gcd_of(set) != 1) continue;
      ScanRow row;
      row.set = std::move(set);
      row.structure = canonical_structure(row.set);
      row.gw_ok =
          std::int64_t(row.structure.k_star) <= row.structure.bound_gw;
      emit(row);
    }
  }
}

}  // namespace powmon
