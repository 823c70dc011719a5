#ifndef POWMON_NUMSGP_HPP
#define POWMON_NUMSGP_HPP

#include <cstdint>
#include <vector>

#include "powmon/natset.hpp"
#include "powmon/rat.hpp"

namespace powmon {

/// Submonoid of (N, +) with finite complement, i.e. generated by positive
/// integers with gcd 1. Construction runs a forward membership sieve up to
/// the crude bound (min gen)*(max gen), then keeps the table on
/// [0, frobenius + max gen]. Everything past the Frobenius number is a
/// member. Immutable after construction.
class NumericalMonoid {
 public:
  /// Rejects empty input, zero generators, and gcd != 1.
  static NumericalMonoid generate(std::vector<Elem> gens);

  /// Monoid generated by the nonzero elements of A. Requires gcd_of(A) = 1
  /// (in particular A != {0}); equals the union of all k-fold sums of A.
  static NumericalMonoid generated_by_set(const NatSet& a);

  /// -1 when the complement is empty (S = N).
  std::int64_t frobenius() const { return frobenius_; }
  const std::vector<Elem>& gaps() const { return gaps_; }
  const std::vector<Elem>& generators() const { return generators_; }

  /// Minimal generating set: generators not reachable from the others.
  const std::vector<Elem>& atoms() const { return atoms_; }

  bool contains(Elem x) const {
    return std::int64_t(x) > frobenius_ || table_[x];
  }

  /// Upper end of the explicit membership table, frobenius + max gen.
  Elem table_limit() const { return Elem(table_.size()) - 1; }

  /// Same submonoid of N (same members).
  friend bool operator==(const NumericalMonoid& a, const NumericalMonoid& b) {
    return a.frobenius_ == b.frobenius_ && a.gaps_ == b.gaps_;
  }

 private:
  friend class PuiseuxFG;
  NumericalMonoid() = default;

  std::vector<Elem> generators_;
  std::vector<Elem> atoms_;
  std::int64_t frobenius_ = -1;
  std::vector<Elem> gaps_;
  std::vector<char> table_;
};

/// Finitely generated submonoid of (Q>=0, +): a Puiseux monoid with an
/// explicit atom set. Membership reduces to the numerical monoid of the
/// cleared-denominator generators divided by their gcd.
class PuiseuxFG {
 public:
  /// Reduces the input to an irredundant atom set (each dropped generator
  /// is a sum of kept ones). Rejects empty input and zero values.
  static PuiseuxFG from_generators(std::vector<Rat> gens);

  const std::vector<Rat>& atoms() const { return atoms_; }

  /// Minimal common denominator of the atoms.
  std::uint64_t den() const { return den_; }

  /// Atoms with denominators cleared: atom * den, over N.
  const std::vector<Elem>& integer_model() const { return integer_model_; }

  bool contains(const Rat& x) const;

  friend bool operator==(const PuiseuxFG& a, const PuiseuxFG& b) {
    return a.atoms_ == b.atoms_;
  }

 private:
  PuiseuxFG() = default;

  std::vector<Rat> atoms_;
  std::uint64_t den_ = 1;
  std::vector<Elem> integer_model_;
  Elem model_gcd_ = 1;
  NumericalMonoid reduced_;
};

namespace detail {
/// True iff x is a non-negative integer combination of gens (bounded DP).
bool representable(Elem x, const std::vector<Elem>& gens);
}  // namespace detail

}  // namespace powmon

#endif
