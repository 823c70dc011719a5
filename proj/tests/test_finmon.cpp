#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "powmon/finmon.hpp"

using namespace powmon;

namespace {

// Oracle: reduced power monoid as literal sets-of-sets composition.
FiniteMonoidTable brute_fpm(const FiniteMonoidTable& m) {
  using Set = std::set<std::size_t>;
  std::vector<std::size_t> elems;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (i != m.identity()) elems.push_back(i);
  const std::size_t n = std::size_t{1} << elems.size();
  std::vector<Set> subsets(n);
  std::map<Set, std::size_t> index;
  for (std::size_t mask = 0; mask < n; ++mask) {
    Set s{m.identity()};
    for (std::size_t t = 0; t < elems.size(); ++t)
      if (mask & (std::size_t{1} << t)) s.insert(elems[t]);
    subsets[mask] = s;
    index[s] = mask;
  }
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Set prod;
      for (std::size_t a : subsets[x])
        for (std::size_t b : subsets[y]) prod.insert(m.op(a, b));
      table[x * n + y] = std::uint16_t(index.at(prod));
    }
  return FiniteMonoidTable::trusted(n, 0, std::move(table));
}

FiniteMonoidTable z2() {
  // additive group of integers mod 2
  return FiniteMonoidTable(2, 0, {0, 1, 1, 0});
}

FiniteMonoidTable z3() {
  return FiniteMonoidTable(3, 0, {0, 1, 2, 1, 2, 0, 2, 0, 1});
}

}  // namespace

TEST_CASE("axioms are enforced for explicit tables") {
  CHECK_NOTHROW(FiniteMonoidTable(1, 0, {0}));
  CHECK_NOTHROW(z2());
  // identity law broken
  CHECK_THROWS_AS(FiniteMonoidTable(2, 0, {1, 1, 1, 1}),
                  std::invalid_argument);
  // non-associative magma: x(yy) != (xy)y
  CHECK_THROWS_AS(FiniteMonoidTable(3, 0, {0, 1, 2, 1, 2, 2, 2, 1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FiniteMonoidTable(2, 5, {0, 1, 1, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FiniteMonoidTable(2, 0, {0, 1, 1}), std::invalid_argument);
}

TEST_CASE("left zero unitization") {
  CHECK_THROWS_AS(left_zero_unitization(0), std::invalid_argument);

  const auto h1 = left_zero_unitization(1);
  CHECK(h1.size() == 2);
  CHECK(monoid_axiom_violation(h1.size(), h1.identity(), h1.table()).empty());
  CHECK(h1.op(1, 1) == 1);

  const auto h2 = left_zero_unitization(2);
  CHECK(h2.size() == 3);
  CHECK(h2.op(1, 2) == 1);  // uw = u
  CHECK(h2.op(2, 1) == 2);  // wu = w
  for (std::size_t v = 1; v <= 4; ++v) {
    const auto h = left_zero_unitization(v);
    CHECK(monoid_axiom_violation(h.size(), h.identity(), h.table()).empty());
    CHECK(is_breakable(h));
  }
}

TEST_CASE("opposite monoid") {
  const auto h = left_zero_unitization(2);
  const auto op = opposite(h);
  CHECK(op.op(1, 2) == 2);  // in H^op, xy = y
  CHECK(opposite(op) == h);
  CHECK(opposite(z2()) == z2());  // commutative
  CHECK(monoid_axiom_violation(op.size(), op.identity(), op.table()).empty());
}

TEST_CASE("breakability") {
  CHECK(is_breakable(FiniteMonoidTable(1, 0, {0})));
  CHECK(!is_breakable(z2()));  // 1+1 = 0 is neither factor
  for (std::size_t v = 1; v <= 4; ++v)
    CHECK(is_breakable(opposite(left_zero_unitization(v))));
}

TEST_CASE("reduced power monoid vs the sets-of-sets oracle") {
  for (std::size_t v = 1; v <= 3; ++v) {
    const auto h = left_zero_unitization(v);
    CHECK(reduced_power_monoid(h) == brute_fpm(h));
    CHECK(reduced_power_monoid(opposite(h)) == brute_fpm(opposite(h)));
  }
  CHECK(reduced_power_monoid(z2()) == brute_fpm(z2()));

  // any 2-element monoid: its reduced power monoid is the idempotent
  // 2-element monoid, here {0,1} under multiplication with identity 1
  const FiniteMonoidTable mult01(2, 1, {0, 0, 0, 1});
  const auto fpm2 = reduced_power_monoid(z2());
  CHECK(fpm2.size() == 2);
  for (std::size_t x = 0; x < 2; ++x) CHECK(fpm2.op(x, x) == x);
  CHECK(tables_isomorphic(fpm2, mult01));
  CHECK(tables_isomorphic(reduced_power_monoid(mult01), mult01));

  const auto axioms_ok = [](const FiniteMonoidTable& t) {
    return monoid_axiom_violation(t.size(), t.identity(), t.table()).empty();
  };
  CHECK(axioms_ok(reduced_power_monoid(left_zero_unitization(3))));
}

TEST_CASE("breakable monoids: power composition is union") {
  for (std::size_t v = 1; v <= 3; ++v) {
    const auto h = left_zero_unitization(v);
    CHECK(reduced_power_monoid(h) == subset_union_monoid(h));
    CHECK(reduced_power_monoid(opposite(h)) == subset_union_monoid(h));
  }
  // any 2-element monoid still collapses to the union table, so the
  // smallest counterexample is a 3-element group
  CHECK(reduced_power_monoid(z2()) == subset_union_monoid(z2()));
  CHECK(reduced_power_monoid(z3()) != subset_union_monoid(z3()));
}

TEST_CASE("equal reduced power monoids from non-isomorphic monoids") {
  for (std::size_t v = 2; v <= 3; ++v) {
    const auto h = left_zero_unitization(v);
    const auto op = opposite(h);
    CHECK(reduced_power_monoid(h) == reduced_power_monoid(op));
    CHECK(!tables_isomorphic(h, op));
  }
  const auto h1 = left_zero_unitization(1);
  CHECK(tables_isomorphic(h1, opposite(h1)));
  CHECK(tables_isomorphic(z2(), z2()));
}

TEST_CASE("guards") {
  const auto big = left_zero_unitization(16);  // 17 elements
  CHECK_THROWS_AS(reduced_power_monoid(big), std::invalid_argument);
  CHECK_THROWS_AS(subset_union_monoid(big), std::invalid_argument);
  const auto nine = left_zero_unitization(8);  // 9 elements
  CHECK_THROWS_AS(tables_isomorphic(nine, nine), std::invalid_argument);
  CHECK_THROWS_AS(tables_isomorphic(nine, left_zero_unitization(2)),
                  std::invalid_argument);
}

TEST_CASE("gallery rows") {
  const auto r1 = gallery_row(1);
  CHECK(r1.fpm_equal);
  CHECK(r1.isomorphic);
  CHECK(r1.breakable);
  CHECK(r1.union_matches);
  for (std::size_t v : {2, 3}) {
    const auto r = gallery_row(v);
    CHECK(r.fpm_equal);
    CHECK(!r.isomorphic);
    CHECK(r.breakable);
    CHECK(r.union_matches);
  }
}
