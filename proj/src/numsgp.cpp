#include "powmon/numsgp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace powmon {

namespace {

// Sieve tables above this are refused outright.
constexpr Elem kSieveGuard = Elem{1} << 26;

std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t q = a / std::gcd(a, b);
  if (q > ~std::uint64_t{0} / b)
    throw std::overflow_error("puiseux monoid: common denominator overflows");
  return q * b;
}

std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > ~std::uint64_t{0} / a)
    throw std::overflow_error("puiseux monoid: cleared generator overflows");
  return a * b;
}

std::vector<Elem> clean_generators(std::vector<Elem> gens) {
  if (gens.empty())
    throw std::invalid_argument("numerical monoid: no generators");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.front() == 0)
    throw std::invalid_argument("numerical monoid: generators must be > 0");
  return gens;
}

}  // namespace

namespace detail {

bool representable(Elem x, const std::vector<Elem>& gens) {
  if (x == 0) return true;
  std::vector<char> reach(x + 1, 0);
  reach[0] = 1;
  for (Elem g : gens) {
    if (g > x) break;  // gens ascending
    for (Elem i = g; i <= x; ++i) reach[i] |= reach[i - g];
  }
  return reach[x];
}

}  // namespace detail

NumericalMonoid NumericalMonoid::generate(std::vector<Elem> gens) {
  gens = clean_generators(std::move(gens));
  Elem g = 0;
  for (Elem v : gens) g = std::gcd(g, v);
  if (g != 1)
    throw std::invalid_argument(
        "numerical monoid: gcd of generators is " + std::to_string(g) +
        ", complement would be infinite");

  // Frobenius < (min gen)*(max gen) for coprime generators, so a sieve up
  // to bound + max covers the table range we keep.
  if (gens.front() > kSieveGuard / gens.back())
    throw std::length_error("numerical monoid: membership sieve guard (2^26)");
  const Elem bound = gens.front() * gens.back();
  std::vector<char> sieve(bound + gens.back() + 1, 0);
  sieve[0] = 1;
  for (Elem i = 0; i < sieve.size(); ++i) {
    if (!sieve[i]) continue;
    for (Elem gen : gens) {
      if (i + gen >= sieve.size()) break;
      sieve[i + gen] = 1;
    }
  }

  NumericalMonoid out;
  out.generators_ = std::move(gens);
  out.frobenius_ = -1;
  for (Elem i = bound + 1; i-- > 0;) {
    if (!sieve[i]) {
      out.frobenius_ = std::int64_t(i);
      break;
    }
  }
  for (Elem i = 1; std::int64_t(i) <= out.frobenius_; ++i)
    if (!sieve[i]) out.gaps_.push_back(i);
  sieve.resize(Elem(out.frobenius_ + 1) + out.generators_.back());
  out.table_ = std::move(sieve);

  // Atoms: ascending scan, a generator reachable from the smaller kept
  // ones is redundant.
  for (Elem gen : out.generators_) {
    if (!detail::representable(gen, out.atoms_)) out.atoms_.push_back(gen);
  }
  return out;
}

NumericalMonoid NumericalMonoid::generated_by_set(const NatSet& a) {
  if (gcd_of(a) != 1)
    throw std::invalid_argument(
        "generated_by_set: gcd of the set must be 1 (gcd{0} = 0)");
  std::vector<Elem> gens(a.elements().begin() + 1, a.elements().end());
  return generate(std::move(gens));
}

PuiseuxFG PuiseuxFG::from_generators(std::vector<Rat> gens) {
  if (gens.empty())
    throw std::invalid_argument("puiseux monoid: no generators");
  for (const Rat& v : gens)
    if (v.is_zero())
      throw std::invalid_argument("puiseux monoid: generators must be > 0");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // Clear denominators once to run the redundancy scan over N.
  std::uint64_t den_all = 1;
  for (const Rat& v : gens) den_all = lcm_checked(den_all, v.den);
  std::vector<Elem> ints;
  ints.reserve(gens.size());
  for (const Rat& v : gens) ints.push_back(mul_checked(v.num, den_all / v.den));

  PuiseuxFG out;
  std::vector<Elem> kept_ints;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!detail::representable(ints[i], kept_ints)) {
      kept_ints.push_back(ints[i]);
      out.atoms_.push_back(gens[i]);
    }
  }

  out.den_ = 1;
  for (const Rat& v : out.atoms_) out.den_ = lcm_checked(out.den_, v.den);
  for (const Rat& v : out.atoms_)
    out.integer_model_.push_back(mul_checked(v.num, out.den_ / v.den));
  out.model_gcd_ = 0;
  for (Elem v : out.integer_model_) out.model_gcd_ = std::gcd(out.model_gcd_, v);
  std::vector<Elem> reduced;
  for (Elem v : out.integer_model_) reduced.push_back(v / out.model_gcd_);
  out.reduced_ = NumericalMonoid::generate(std::move(reduced));
  return out;
}

bool PuiseuxFG::contains(const Rat& x) const {
  if (x.is_zero()) return true;  // empty sum
  using u128 = unsigned __int128;
  const u128 scaled = u128(x.num) * den_;
  if (scaled % x.den != 0) return false;
  const u128 v = scaled / x.den;
  if (v > u128(~Elem{0})) return false;
  if (Elem(v) % model_gcd_ != 0) return false;
  return reduced_.contains(Elem(v) / model_gcd_);
}

}  // namespace powmon
