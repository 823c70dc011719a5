#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "powmon/natset.hpp"

using namespace powmon;

namespace {

// Oracle: definitional all-pairs sumset over std::set, no shared code with
// the library kernels.
std::vector<Elem> naive_sumset(const std::vector<Elem>& x,
                               const std::vector<Elem>& y) {
  std::set<Elem> out;
  for (Elem a : x)
    for (Elem b : y) out.insert(a + b);
  return {out.begin(), out.end()};
}

std::vector<Elem> naive_kfold(const std::vector<Elem>& x, std::uint64_t k) {
  std::vector<Elem> cur{0};
  for (std::uint64_t i = 0; i < k; ++i) cur = naive_sumset(cur, x);
  return cur;
}

NatSet random_set(std::mt19937_64& rng, Elem max_elem, double density = 0.4) {
  std::vector<Elem> v{0};
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (Elem e = 1; e < max_elem; ++e)
    if (coin(rng) < density) v.push_back(e);
  if (max_elem > 0) v.push_back(max_elem);
  return NatSet(std::move(v));
}

}  // namespace

TEST_CASE("construction and invariants") {
  CHECK(NatSet().elements() == std::vector<Elem>{0});
  CHECK(NatSet({0, 3, 1, 3}).elements() == std::vector<Elem>{0, 1, 3});
  CHECK_THROWS_AS(NatSet({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(NatSet(std::vector<Elem>{}), std::invalid_argument);
}

TEST_CASE("literal parse and print") {
  CHECK(NatSet::parse("0,2,3").elements() == std::vector<Elem>{0, 2, 3});
  CHECK(NatSet::parse("0").to_string() == "0");
  CHECK(NatSet({0, 10, 7}).to_string() == "0,7,10");
  CHECK_THROWS_WITH_AS(NatSet::parse("0,x,3"),
                       "set literal: position 3: bad token 'x'",
                       std::invalid_argument);
  CHECK_THROWS_AS(NatSet::parse("0,3,2"), std::invalid_argument);
  CHECK_THROWS_AS(NatSet::parse("2,3"), std::invalid_argument);
  CHECK_THROWS_AS(NatSet::parse(""), std::invalid_argument);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const NatSet s = random_set(rng, 1 + rng() % 300);
    CHECK(NatSet::parse(s.to_string()) == s);
  }
}

TEST_CASE("sumset matches the definitional oracle") {
  CHECK(sumset(NatSet(), NatSet({0, 4, 9})) == NatSet({0, 4, 9}));
  CHECK(sumset(NatSet({0, 1}), NatSet({0, 1})) == NatSet({0, 1, 2}));
  CHECK(sumset(NatSet({0, 2, 3}), NatSet({0, 2, 3})) ==
        NatSet({0, 2, 3, 4, 5, 6}));

  std::mt19937_64 rng(11);
  for (int i = 0; i < 120; ++i) {
    const NatSet x = random_set(rng, 1 + rng() % 200);
    const NatSet y = random_set(rng, 1 + rng() % 200);
    const NatSet s = sumset(x, y);
    CHECK(s.elements() == naive_sumset(x.elements(), y.elements()));
    CHECK(s == sumset_elements(x, y));  // backends interchangeable
    CHECK(s == sumset(y, x));
    CHECK(s.max() == x.max() + y.max());
  }
}

TEST_CASE("sumset algebra: associativity, identity, least nonzero element") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 40; ++i) {
    const NatSet x = random_set(rng, 1 + rng() % 60);
    const NatSet y = random_set(rng, 1 + rng() % 60);
    const NatSet z = random_set(rng, 1 + rng() % 60);
    CHECK(sumset(sumset(x, y), z) == sumset(x, sumset(y, z)));
    CHECK(sumset(x, NatSet()) == x);
    if (x.size() > 1 && y.size() > 1) {
      const Elem mx = x.elements()[1], my = y.elements()[1];
      CHECK(sumset(x, y).elements()[1] == std::min(mx, my));
    }
  }
}

TEST_CASE("kfold: examples and degenerate cases") {
  for (std::uint64_t k : {0u, 1u, 2u, 7u, 40u}) {
    std::vector<Elem> interval(k + 1);
    for (Elem i = 0; i <= k; ++i) interval[i] = i;
    CHECK(kfold(NatSet({0, 1}), k) == NatSet(std::move(interval)));
  }
  CHECK(kfold(NatSet({0, 5, 9}), 0) == NatSet());
  CHECK(kfold(NatSet(), 17) == NatSet());
  // {0,2,3} three-fold: {0} u [2,9], frozen from the oracle below.
  CHECK(kfold(NatSet({0, 2, 3}), 3).elements() ==
        naive_kfold({0, 2, 3}, 3));
  CHECK(kfold(NatSet({0, 2, 3}), 3) ==
        NatSet({0, 2, 3, 4, 5, 6, 7, 8, 9}));
}

TEST_CASE("kfold by doubling equals successive sumsets") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 150; ++i) {
    const NatSet x = random_set(rng, 1 + rng() % 30);
    NatSet cur;
    for (std::uint64_t k = 0; k <= 40; ++k) {
      CHECK(kfold(x, k) == cur);
      cur = sumset(cur, x);
    }
  }
  // and against the definitional oracle on a smaller corpus
  for (int i = 0; i < 25; ++i) {
    const NatSet x = random_set(rng, 1 + rng() % 20);
    for (std::uint64_t k : {2u, 3u, 5u, 11u})
      CHECK(kfold(x, k).elements() == naive_kfold(x.elements(), k));
  }
}

TEST_CASE("kfold monotone growth") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 30; ++i) {
    const NatSet x = random_set(rng, 1 + rng() % 40);
    NatSet prev = kfold(x, 0);
    for (std::uint64_t k = 1; k <= 12; ++k) {
      const NatSet next = kfold(x, k);
      for (Elem e : prev.elements()) CHECK(next.contains(e));
      prev = next;
    }
  }
}

TEST_CASE("reflect") {
  CHECK(reflect(NatSet()) == NatSet());
  CHECK(reflect(NatSet({0, 3, 5})) == NatSet({0, 2, 5}));
  CHECK(reflect(NatSet({0, 1})) == NatSet({0, 1}));

  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    const NatSet x = random_set(rng, 1 + rng() % 200);
    CHECK(reflect(reflect(x)) == x);
    CHECK(reflect(x).contains(0));
    CHECK(reflect(x).max() == x.max());
    if (gcd_of(x) == 1) CHECK(gcd_of(reflect(x)) == 1);
  }
}

TEST_CASE("gcd_of") {
  CHECK(gcd_of(NatSet()) == 0);  // gcd{0} = 0
  CHECK(gcd_of(NatSet({0, 2, 4})) == 2);
  CHECK(gcd_of(NatSet({0, 6, 10, 15})) == 1);
}

TEST_CASE("divide_exact and scale") {
  CHECK(divide_exact(NatSet({0, 2, 4}), 2) == NatSet({0, 1, 2}));
  CHECK(divide_exact(NatSet({0, 6, 9}), 3) == NatSet({0, 2, 3}));
  CHECK_THROWS_AS(divide_exact(NatSet({0, 2, 3}), 2), std::invalid_argument);
  CHECK_THROWS_AS(divide_exact(NatSet({0, 2}), 0), std::invalid_argument);
  CHECK(scale(NatSet({0, 1, 3}), 4) == NatSet({0, 4, 12}));
  CHECK(divide_exact(scale(NatSet({0, 5, 7}), 9), 9) == NatSet({0, 5, 7}));
}

TEST_CASE("universe guards fail loudly") {
  CHECK_THROWS_AS(kfold(NatSet({0, 1'000'000}), 10'000'000),
                  std::length_error);
  CHECK_THROWS_AS(scale(NatSet({0, 1'000'000'000}), 1'000'000'000),
                  std::length_error);
}
