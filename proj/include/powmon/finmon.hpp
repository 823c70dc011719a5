#ifndef POWMON_FINMON_HPP
#define POWMON_FINMON_HPP

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace powmon {

/// Explicit multiplication table of a small finite monoid. Elements are
/// indices 0..size-1; table is row-major, table[i*size + j] = i*j. The
/// public constructor checks the identity law and associativity over all
/// triples; derived constructions (opposite, subset monoids) go through
/// the trusted path since their axioms are inherited.
class FiniteMonoidTable {
 public:
  FiniteMonoidTable(std::size_t size, std::size_t identity,
                    std::vector<std::uint16_t> table);

  std::size_t size() const { return size_; }
  std::size_t identity() const { return identity_; }
  std::uint16_t op(std::size_t i, std::size_t j) const {
    return table_[i * size_ + j];
  }
  const std::vector<std::uint16_t>& table() const { return table_; }

  friend bool operator==(const FiniteMonoidTable&,
                         const FiniteMonoidTable&) = default;

  /// Precondition: the table already satisfies the monoid axioms.
  static FiniteMonoidTable trusted(std::size_t size, std::size_t identity,
                                   std::vector<std::uint16_t> table);

 private:
  struct Trusted {};
  FiniteMonoidTable(Trusted, std::size_t size, std::size_t identity,
                    std::vector<std::uint16_t> table);

  std::size_t size_;
  std::size_t identity_;
  std::vector<std::uint16_t> table_;
};

/// Empty string when the axioms hold, else a description of the first
/// violation found.
std::string monoid_axiom_violation(std::size_t size, std::size_t identity,
                                   const std::vector<std::uint16_t>& table);

/// Left-zero semigroup on v elements (xy = x) with an adjoined identity
/// at index 0; v + 1 elements in total.
FiniteMonoidTable left_zero_unitization(std::size_t v);

/// Transposed table: x *op* y = y * x.
FiniteMonoidTable opposite(const FiniteMonoidTable& m);

/// Monoid of all subsets of M containing the identity, under setwise
/// product. Elements are indexed by the bitmask of non-identity members
/// (mask 0 = {identity}), so tables of monoids on the same carrier are
/// directly comparable. Guard: |M| <= 16 (2^(|M|-1) subsets).
FiniteMonoidTable reduced_power_monoid(const FiniteMonoidTable& m);

/// Same element indexing as reduced_power_monoid, but with union as the
/// operation; for breakable monoids the two tables coincide.
FiniteMonoidTable subset_union_monoid(const FiniteMonoidTable& m);

/// Brute-force search for an identity-preserving table isomorphism.
/// Guard: equal sizes, size <= 8.
bool tables_isomorphic(const FiniteMonoidTable& m1, const FiniteMonoidTable& m2);

/// xy in {x, y} for all x, y.
bool is_breakable(const FiniteMonoidTable& m);

struct GalleryRow {
  std::size_t v = 0;
  bool fpm_equal = false;    // reduced power monoids byte-identical
  bool isomorphic = false;   // the monoids themselves
  bool breakable = false;
  bool union_matches = false;  // reduced power operation is set union
};

/// Left-zero unitization vs. its opposite for a given v.
GalleryRow gallery_row(std::size_t v);

}  // namespace powmon

#endif
