#include "powmon/qset.hpp"

#include <numeric>
#include <stdexcept>

namespace powmon {

namespace {

std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t g = std::gcd(a, b);
  const std::uint64_t q = a / g;
  if (b != 0 && q > ~std::uint64_t{0} / b)
    throw std::overflow_error("QSet: common denominator overflows");
  return q * b;
}

}  // namespace

QSet QSet::from_parts(std::uint64_t den, NatSet num) {
  if (den == 0) throw std::invalid_argument("QSet: zero denominator");
  // gcd_of({0}) = 0, so g = den there and {0} lands on denominator 1.
  const std::uint64_t g = std::gcd(den, gcd_of(num));
  QSet out;
  out.den_ = den / g;
  out.num_ = g == 1 ? std::move(num) : divide_exact(num, g);
  return out;
}

QSet QSet::make(const std::vector<Rat>& values, bool strict) {
  if (values.empty() && strict)
    throw std::invalid_argument("QSet: empty value list (0 required)");
  std::uint64_t den = 1;
  for (const Rat& v : values) den = lcm_checked(den, v.den);
  std::vector<Elem> nums;
  nums.reserve(values.size() + 1);
  bool has_zero = false;
  for (const Rat& v : values) {
    const std::uint64_t scale = den / v.den;
    if (v.num != 0 && scale > ~std::uint64_t{0} / v.num)
      throw std::overflow_error("QSet: numerator overflows");
    nums.push_back(v.num * scale);
    has_zero |= v.num == 0;
  }
  if (!has_zero) {
    if (strict) throw std::invalid_argument("QSet: 0 missing from values");
    nums.push_back(0);
  }
  return from_parts(den, NatSet(std::move(nums)));
}

QSet QSet::parse(std::string_view literal, bool strict) {
  std::vector<Rat> values;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = literal.find(',', pos);
    const std::string_view tok = literal.substr(
        pos, comma == std::string_view::npos ? comma : comma - pos);
    try {
      values.push_back(Rat::parse(tok));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("rational set literal: position " +
                                  std::to_string(pos + 1) + ": bad token '" +
                                  std::string(tok) + "'");
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return make(values, strict);
}

std::vector<Rat> QSet::values() const {
  std::vector<Rat> out;
  out.reserve(size());
  for (Elem e : num_.elements()) out.emplace_back(e, den_);
  return out;
}

bool QSet::contains(const Rat& x) const {
  // x = e / den for some element e; x.den divides den in that case.
  if (den_ % x.den != 0) return false;
  const std::uint64_t scale = den_ / x.den;
  if (x.num != 0 && scale > ~std::uint64_t{0} / x.num) return false;
  return num_.contains(x.num * scale);
}

std::string QSet::to_string() const {
  std::string s;
  bool first = true;
  for (const Rat& v : values()) {
    if (!first) s += ',';
    s += v.to_string();
    first = false;
  }
  return s;
}

QSet sumset(const QSet& x, const QSet& y) {
  const std::uint64_t den = lcm_checked(x.den(), y.den());
  const NatSet xs = scale(x.num(), den / x.den());
  const NatSet ys = scale(y.num(), den / y.den());
  return QSet::from_parts(den, sumset(xs, ys));
}

QSet kfold(const QSet& x, std::uint64_t k) {
  if (k == 0) return QSet();
  return QSet::from_parts(x.den(), kfold(x.num(), k));
}

}  // namespace powmon
