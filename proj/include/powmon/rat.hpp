#ifndef POWMON_RAT_HPP
#define POWMON_RAT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace powmon {

/// Non-negative rational, always in lowest terms. Arithmetic is exact;
/// anything that would leave uint64 range throws std::overflow_error.
struct Rat {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  Rat() = default;
  Rat(std::uint64_t n, std::uint64_t d);

  /// Parses `p` or `p/q` (decimal, q > 0).
  static Rat parse(std::string_view token);

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }

  /// `p` when integral, else `p/q`.
  std::string to_string() const;

  friend bool operator==(const Rat&, const Rat&) = default;
  std::strong_ordering operator<=>(const Rat& other) const;
};

Rat operator+(const Rat& a, const Rat& b);
Rat operator*(const Rat& a, const Rat& b);
Rat operator/(const Rat& a, const Rat& b);

}  // namespace powmon

#endif
