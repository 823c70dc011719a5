#ifndef POWMON_NATSET_HPP
#define POWMON_NATSET_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace powmon {

using Elem = std::uint64_t;

/// Discrete interval {x : lo <= x <= hi}; empty exactly when hi < lo.
struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = -1;

  bool empty() const { return hi < lo; }
  std::int64_t length() const { return empty() ? 0 : hi - lo + 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite subset of the non-negative integers that contains 0.
///
/// The empty set is unrepresentable: a default-constructed NatSet is {0},
/// and every construction path rejects inputs without 0. Elements are held
/// as a strictly increasing sequence. Values are immutable once built, so
/// concurrent reads are safe.
class NatSet {
 public:
  NatSet() : elems_{0} {}

  /// Builds from arbitrary values: sorts, drops duplicates, requires 0.
  explicit NatSet(std::vector<Elem> values);
  NatSet(std::initializer_list<Elem> values)
      : NatSet(std::vector<Elem>(values)) {}

  /// Trusted path for values already strictly ascending and starting at 0.
  static NatSet from_sorted(std::vector<Elem> values);

  /// Parses the literal format `0,2,3`: comma-separated decimal integers,
  /// strictly ascending, first element 0. Errors name position and token.
  static NatSet parse(std::string_view literal);

  const std::vector<Elem>& elements() const { return elems_; }
  Elem max() const { return elems_.back(); }
  std::size_t size() const { return elems_.size(); }
  bool contains(Elem x) const;

  /// `0,2,3` — ascending, no spaces.
  std::string to_string() const;

  friend bool operator==(const NatSet&, const NatSet&) = default;

 private:
  struct Trusted {};
  NatSet(Trusted, std::vector<Elem>&& v) : elems_(std::move(v)) {}

  std::vector<Elem> elems_;
};

/// Setwise sum {x + y : x in X, y in Y}.
NatSet sumset(const NatSet& x, const NatSet& y);

/// Sorted-element backend for sumset (all pairs, merge). Same contract as
/// sumset(); kept separate so the two backends can be checked against each
/// other.
NatSet sumset_elements(const NatSet& x, const NatSet& y);

/// k-fold sum X + X + ... + X (k summands); k = 0 gives {0}.
/// Binary doubling over the bit-vector backend.
NatSet kfold(const NatSet& x, std::uint64_t k);

/// {max X - x : x in X}.
NatSet reflect(const NatSet& x);

/// gcd of all elements, with gcd{0} = 0.
Elem gcd_of(const NatSet& x);

/// {x / q : x in X}; rejects q = 0 and any element not divisible by q.
NatSet divide_exact(const NatSet& x, Elem q);

/// {x * factor : x in X}; rejects factor = 0 and overflow.
NatSet scale(const NatSet& x, Elem factor);

}  // namespace powmon

#endif
