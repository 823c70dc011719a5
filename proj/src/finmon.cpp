#include "powmon/finmon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace powmon {

std::string monoid_axiom_violation(std::size_t size, std::size_t identity,
                                   const std::vector<std::uint16_t>& table) {
  if (size == 0) return "empty carrier";
  if (identity >= size) return "identity index out of range";
  if (table.size() != size * size) return "table size mismatch";
  for (std::uint16_t v : table)
    if (v >= size) return "table entry out of range";
  const auto op = [&](std::size_t i, std::size_t j) {
    return table[i * size + j];
  };
  for (std::size_t x = 0; x < size; ++x) {
    if (op(identity, x) != x || op(x, identity) != x)
      return "identity law fails at element " + std::to_string(x);
  }
  for (std::size_t x = 0; x < size; ++x)
    for (std::size_t y = 0; y < size; ++y)
      for (std::size_t z = 0; z < size; ++z)
        if (op(op(x, y), z) != op(x, op(y, z)))
          return "associativity fails at (" + std::to_string(x) + "," +
                 std::to_string(y) + "," + std::to_string(z) + ")";
  return {};
}

FiniteMonoidTable::FiniteMonoidTable(std::size_t size, std::size_t identity,
                                     std::vector<std::uint16_t> table)
    : size_(size), identity_(identity), table_(std::move(table)) {
  const std::string why = monoid_axiom_violation(size_, identity_, table_);
  if (!why.empty())
    throw std::invalid_argument("monoid table: " + why);
}

FiniteMonoidTable::FiniteMonoidTable(Trusted, std::size_t size,
                                     std::size_t identity,
                                     std::vector<std::uint16_t> table)
    : size_(size), identity_(identity), table_(std::move(table)) {}

FiniteMonoidTable FiniteMonoidTable::trusted(std::size_t size,
                                             std::size_t identity,
                                             std::vector<std::uint16_t> table) {
  return FiniteMonoidTable(Trusted{}, size, identity, std::move(table));
}

FiniteMonoidTable left_zero_unitization(std::size_t v) {
  if (v == 0)
    throw std::invalid_argument("left_zero_unitization: v must be >= 1");
  const std::size_t n = v + 1;
  std::vector<std::uint16_t> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t[i * n + j] = std::uint16_t(i == 0 ? j : i);  // e*y = y, x*y = x
  return FiniteMonoidTable::trusted(n, 0, std::move(t));
}

FiniteMonoidTable opposite(const FiniteMonoidTable& m) {
  const std::size_t n = m.size();
  std::vector<std::uint16_t> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = m.op(j, i);
  return FiniteMonoidTable::trusted(n, m.identity(), std::move(t));
}

namespace {

// Subsets of the carrier containing the identity, encoded as bitmasks
// over the non-identity elements in index order.
std::vector<std::size_t> non_identity_elements(const FiniteMonoidTable& m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (i != m.identity()) out.push_back(i);
  return out;
}

}  // namespace

FiniteMonoidTable reduced_power_monoid(const FiniteMonoidTable& m) {
  if (m.size() > 16)
    throw std::invalid_argument(
        "reduced_power_monoid: carrier guard (16 elements) exceeded");
  const auto elems = non_identity_elements(m);
  const std::size_t bits = elems.size();
  const std::size_t n = std::size_t{1} << bits;
  std::vector<std::size_t> index_of(m.size(), bits);  // position in `elems`
  for (std::size_t t = 0; t < bits; ++t) index_of[elems[t]] = t;

  std::vector<std::uint16_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      // members of the product set, as a mask; the identity is implicit.
      std::size_t prod = 0;
      const auto absorb = [&](std::size_t e) {
        if (e != m.identity()) prod |= std::size_t{1} << index_of[e];
      };
      for (std::size_t i = 0; i <= bits; ++i) {
        if (i < bits && !(x & (std::size_t{1} << i))) continue;
        const std::size_t xe = i < bits ? elems[i] : m.identity();
        for (std::size_t j = 0; j <= bits; ++j) {
          if (j < bits && !(y & (std::size_t{1} << j))) continue;
          const std::size_t ye = j < bits ? elems[j] : m.identity();
          absorb(m.op(xe, ye));
        }
      }
      table[x * n + y] = std::uint16_t(prod);
    }
  }
  return FiniteMonoidTable::trusted(n, 0, std::move(table));
}

FiniteMonoidTable subset_union_monoid(const FiniteMonoidTable& m) {
  if (m.size() > 16)
    throw std::invalid_argument(
        "subset_union_monoid: carrier guard (16 elements) exceeded");
  const std::size_t bits = m.size() - 1;
  const std::size_t n = std::size_t{1} << bits;
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      table[x * n + y] = std::uint16_t(x | y);
  return FiniteMonoidTable::trusted(n, 0, std::move(table));
}

bool tables_isomorphic(const FiniteMonoidTable& m1,
                       const FiniteMonoidTable& m2) {
  if (m1.size() != m2.size())
    throw std::invalid_argument("tables_isomorphic: sizes differ");
  if (m1.size() > 8)
    throw std::invalid_argument(
        "tables_isomorphic: size guard (8 elements) exceeded");
  const std::size_t n = m1.size();
  std::vector<std::size_t> src, dst;
  for (std::size_t i = 0; i < n; ++i)
    if (i != m1.identity()) src.push_back(i);
  for (std::size_t i = 0; i < n; ++i)
    if (i != m2.identity()) dst.push_back(i);

  std::sort(dst.begin(), dst.end());
  do {
    std::vector<std::size_t> f(n);
    f[m1.identity()] = m2.identity();
    for (std::size_t i = 0; i < src.size(); ++i) f[src[i]] = dst[i];
    bool good = true;
    for (std::size_t x = 0; x < n && good; ++x)
      for (std::size_t y = 0; y < n && good; ++y)
        good = f[m1.op(x, y)] == m2.op(f[x], f[y]);
    if (good) return true;
  } while (std::next_permutation(dst.begin(), dst.end()));
  return false;
}

bool is_breakable(const FiniteMonoidTable& m) {
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = 0; y < m.size(); ++y) {
      const std::uint16_t p = m.op(x, y);
      if (p != x && p != y) return false;
    }
  return true;
}

GalleryRow gallery_row(std::size_t v) {
  GalleryRow row;
  row.v = v;
  const FiniteMonoidTable h = left_zero_unitization(v);
  const FiniteMonoidTable h_op = opposite(h);
  const FiniteMonoidTable fpm = reduced_power_monoid(h);
  row.fpm_equal = fpm == reduced_power_monoid(h_op);
  row.isomorphic = tables_isomorphic(h, h_op);
  row.breakable = is_breakable(h) && is_breakable(h_op);
  row.union_matches = fpm == subset_union_monoid(h);
  return row;
}

}  // namespace powmon
