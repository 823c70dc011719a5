#include "powmon/natset.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "bits.hpp"

namespace powmon {

namespace {

void check_universe(Elem bits, const char* op) {
  if (bits > detail::kUniverseBitLimit)
    throw std::length_error(std::string(op) +
                            ": set universe guard exceeded (2^31 bits)");
}

}  // namespace

NatSet::NatSet(std::vector<Elem> values) {
  if (values.empty()) throw std::invalid_argument("NatSet: no values");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.front() != 0)
    throw std::invalid_argument("NatSet: must contain 0");
  elems_ = std::move(values);
}

NatSet NatSet::from_sorted(std::vector<Elem> values) {
  assert(!values.empty() && values.front() == 0);
  assert(std::is_sorted(values.begin(), values.end()) &&
         std::adjacent_find(values.begin(), values.end()) == values.end());
  return NatSet(Trusted{}, std::move(values));
}

NatSet NatSet::parse(std::string_view literal) {
  std::vector<Elem> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = literal.find(',', pos);
    const std::string_view tok = literal.substr(
        pos, comma == std::string_view::npos ? comma : comma - pos);
    Elem v = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size() || tok.empty())
      throw std::invalid_argument("set literal: position " +
                                  std::to_string(pos + 1) + ": bad token '" +
                                  std::string(tok) + "'");
    if (!out.empty() && v <= out.back())
      throw std::invalid_argument("set literal: position " +
                                  std::to_string(pos + 1) + ": token '" +
                                  std::string(tok) +
                                  "' breaks strict ascending order");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (out.front() != 0)
    throw std::invalid_argument("set literal: position 1: must start at 0");
  return from_sorted(std::move(out));
}

bool NatSet::contains(Elem x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::string NatSet::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(elems_[i]);
  }
  return s;
}

NatSet sumset_elements(const NatSet& x, const NatSet& y) {
  std::vector<Elem> out;
  out.reserve(x.size() * y.size());
  for (Elem a : x.elements())
    for (Elem b : y.elements()) out.push_back(a + b);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return NatSet::from_sorted(std::move(out));
}

NatSet sumset(const NatSet& x, const NatSet& y) {
  if (x.max() == 0) return y;
  if (y.max() == 0) return x;
  if (x.size() * y.size() <= 256) return sumset_elements(x, y);
  check_universe(x.max() + y.max() + 1, "sumset");
  return detail::to_natset(detail::add(detail::to_bits(x), detail::to_bits(y)));
}

NatSet kfold(const NatSet& x, std::uint64_t k) {
  if (k == 0 || x.max() == 0) return k == 0 ? NatSet() : x;
  if (k == 1) return x;
  if (x.max() > (detail::kUniverseBitLimit - 1) / k)
    throw std::length_error("kfold: set universe guard exceeded (2^31 bits)");
  detail::Bits base = detail::to_bits(x);
  detail::Bits acc;
  bool have_acc = false;
  while (true) {
    if (k & 1) {
      acc = have_acc ? detail::add(acc, base) : base;
      have_acc = true;
    }
    k >>= 1;
    if (!k) break;
    base = detail::add(base, base);
  }
  return detail::to_natset(acc);
}

NatSet reflect(const NatSet& x) {
  const Elem m = x.max();
  std::vector<Elem> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    out[i] = m - x.elements()[x.size() - 1 - i];
  return NatSet::from_sorted(std::move(out));
}

Elem gcd_of(const NatSet& x) {
  Elem g = 0;
  for (Elem e : x.elements()) g = std::gcd(g, e);
  return g;
}

NatSet divide_exact(const NatSet& x, Elem q) {
  if (q == 0) throw std::invalid_argument("divide_exact: divisor must be > 0");
  std::vector<Elem> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Elem e = x.elements()[i];
    if (e % q != 0)
      throw std::invalid_argument("divide_exact: " + std::to_string(e) +
                                  " not divisible by " + std::to_string(q));
    out[i] = e / q;
  }
  return NatSet::from_sorted(std::move(out));
}

NatSet scale(const NatSet& x, Elem factor) {
  if (factor == 0) throw std::invalid_argument("scale: factor must be > 0");
  if (x.max() > 0 && factor > (detail::kUniverseBitLimit - 1) / x.max())
    throw std::length_error("scale: set universe guard exceeded (2^31 bits)");
  std::vector<Elem> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    out[i] = x.elements()[i] * factor;
  return NatSet::from_sorted(std::move(out));
}

}  // namespace powmon
