#include "powmon/rat.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace powmon {

namespace {

using u128 = unsigned __int128;

std::uint64_t narrow(u128 v, const char* what) {
  if (v > u128(~std::uint64_t{0}))
    throw std::overflow_error(std::string("rational overflow in ") + what);
  return std::uint64_t(v);
}

u128 gcd128(u128 a, u128 b) {
  while (b) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rat reduce128(u128 n, u128 d, const char* what) {
  if (d == 0) throw std::invalid_argument("rational: zero denominator");
  const u128 g = n == 0 ? d : gcd128(n, d);
  n /= g;
  d /= g;
  return Rat(narrow(n, what), narrow(d, what));
}

std::uint64_t parse_u64(std::string_view tok, std::string_view full) {
  std::uint64_t v = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size() || tok.empty())
    throw std::invalid_argument("rational literal: bad token '" +
                                std::string(full) + "'");
  return v;
}

}  // namespace

Rat::Rat(std::uint64_t n, std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("rational: zero denominator");
  const std::uint64_t g = n == 0 ? d : std::gcd(n, d);
  num = n / g;
  den = d / g;
}

Rat Rat::parse(std::string_view token) {
  const std::size_t slash = token.find('/');
  if (slash == std::string_view::npos) return Rat(parse_u64(token, token), 1);
  const std::uint64_t n = parse_u64(token.substr(0, slash), token);
  const std::uint64_t d = parse_u64(token.substr(slash + 1), token);
  if (d == 0)
    throw std::invalid_argument("rational literal: zero denominator in '" +
                                std::string(token) + "'");
  return Rat(n, d);
}

std::string Rat::to_string() const {
  return den == 1 ? std::to_string(num)
                  : std::to_string(num) + "/" + std::to_string(den);
}

std::strong_ordering Rat::operator<=>(const Rat& other) const {
  const u128 l = u128(num) * other.den;
  const u128 r = u128(other.num) * den;
  return l < r ? std::strong_ordering::less
               : (l > r ? std::strong_ordering::greater
                        : std::strong_ordering::equal);
}

Rat operator+(const Rat& a, const Rat& b) {
  return reduce128(u128(a.num) * b.den + u128(b.num) * a.den,
                   u128(a.den) * b.den, "addition");
}

Rat operator*(const Rat& a, const Rat& b) {
  return reduce128(u128(a.num) * b.num, u128(a.den) * b.den, "multiplication");
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.num == 0) throw std::invalid_argument("rational: division by zero");
  return reduce128(u128(a.num) * b.den, u128(a.den) * b.num, "division");
}

}  // namespace powmon
