#ifndef POWMON_QSET_HPP
#define POWMON_QSET_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "powmon/natset.hpp"
#include "powmon/rat.hpp"

namespace powmon {

/// Finite subset of the non-negative rationals containing 0, held as an
/// integer set over a common denominator: {x / den : x in num}.
///
/// The form is canonical: den is the minimal common denominator (no d > 1
/// divides den together with every element of num; num = {0} forces
/// den = 1), so equality is field-by-field. Immutable; safe to read
/// concurrently.
class QSet {
 public:
  QSet() : den_(1) {}  // {0}

  /// Builds from rational values. 0 is inserted when absent, unless
  /// `strict`, which rejects instead. Duplicates collapse.
  static QSet make(const std::vector<Rat>& values, bool strict = false);

  /// Normalizes an explicit (denominator, integer set) pair.
  static QSet from_parts(std::uint64_t den, NatSet num);

  /// Parses `0,1/2,2/3` (integer or p/q tokens, any order).
  static QSet parse(std::string_view literal, bool strict = false);

  std::uint64_t den() const { return den_; }
  const NatSet& num() const { return num_; }
  std::size_t size() const { return num_.size(); }
  Rat max_value() const { return Rat(num_.max(), den_); }
  std::vector<Rat> values() const;
  bool contains(const Rat& x) const;

  /// Ascending, normalized: `0,1/2,2/3`.
  std::string to_string() const;

  friend bool operator==(const QSet&, const QSet&) = default;

 private:
  std::uint64_t den_;
  NatSet num_;
};

/// Setwise sum over the rationals, re-normalized.
QSet sumset(const QSet& x, const QSet& y);

/// k-fold sum; equals the k-fold sum of the integer model over the same
/// denominator, then normalized.
QSet kfold(const QSet& x, std::uint64_t k);

}  // namespace powmon

#endif
