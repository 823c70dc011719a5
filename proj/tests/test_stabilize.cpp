#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "powmon/stabilize.hpp"

using namespace powmon;

namespace {

// Oracle: least h whose window is clean, on plain std::set k-fold sums.
std::uint64_t naive_h_min(const std::vector<Elem>& a, std::uint64_t window,
                          std::uint64_t cap) {
  const Elem top = a.back();
  std::vector<char> ok(cap + 1, 0);
  std::set<Elem> cur{0};
  for (std::uint64_t k = 0; k <= cap; ++k) {
    std::set<Elem> nxt, rhs;
    for (Elem x : cur)
      for (Elem y : a) nxt.insert(x + y);
    for (Elem x : cur) {
      rhs.insert(x);
      rhs.insert(x + top);
    }
    ok[k] = nxt == rhs;
    cur = std::move(nxt);
  }
  for (std::uint64_t h = 0;; ++h) {
    bool clean = h + window <= cap;
    for (std::uint64_t k = h; clean && k <= h + window; ++k) clean = ok[k];
    if (clean) return h;
  }
}

}  // namespace

TEST_CASE("worked onsets") {
  const auto r1 = stabilization_onset(QSet::parse("0,1"));
  CHECK(r1.h_min == 0);
  CHECK(r1.window == 50);

  const auto r2 = stabilization_onset(QSet::parse("0,2,3"));
  CHECK(r2.h_min == 2);  // fails at k = 1: 4 is missing from {0,2,3}+{0,3}
  CHECK(r2.threshold == 2);

  // dilated copy of the same set: {0,1,3/2}
  const auto r3 = stabilization_onset(QSet::from_parts(2, NatSet({0, 2, 3})));
  CHECK(r3.h_min == 2);
  CHECK(r3.input.to_string() == "0,1,3/2");

  const auto r4 = stabilization_onset(QSet());  // degenerate {0}
  CHECK(r4.h_min == 0);
  CHECK(r4.threshold == 0);
}

TEST_CASE("report facts: window persistence and failure at h_min - 1") {
  std::mt19937_64 rng(79);
  for (int i = 0; i < 30; ++i) {
    std::vector<Rat> vals{Rat()};
    const int n = 1 + int(rng() % 4);
    for (int j = 0; j < n; ++j) vals.emplace_back(1 + rng() % 10, 1 + rng() % 4);
    const QSet a = QSet::make(vals);
    const auto rep = stabilization_onset(a, 25);
    CHECK(rep.h_min <= rep.threshold);
    const QSet step = QSet::make({Rat(), a.max_value()});
    QSet cur = kfold(a, rep.h_min);
    for (std::uint64_t k = rep.h_min; k <= rep.h_min + rep.window; ++k) {
      const QSet nxt = kfold(a, k + 1);
      CHECK(nxt == sumset(cur, step));
      cur = nxt;
    }
    if (rep.h_min > 0) {
      CHECK(kfold(a, rep.h_min) !=
            sumset(kfold(a, rep.h_min - 1), step));
    }
  }
}

TEST_CASE("h_min agrees with the naive oracle") {
  std::mt19937_64 rng(83);
  for (int i = 0; i < 20; ++i) {
    std::vector<Elem> elems{0};
    const int n = 1 + int(rng() % 3);
    for (int j = 0; j < n; ++j) elems.push_back(1 + rng() % 8);
    const NatSet a(std::move(elems));
    const auto rep = stabilization_onset(QSet::from_parts(1, a), 20);
    CHECK(rep.h_min == naive_h_min(a.elements(), 20, rep.threshold + 40));
  }
}

TEST_CASE("gcd invariance of the onset") {
  std::mt19937_64 rng(89);
  for (int i = 0; i < 25; ++i) {
    std::vector<Elem> elems{0};
    const int n = 1 + int(rng() % 4);
    for (int j = 0; j < n; ++j) elems.push_back(1 + rng() % 12);
    const NatSet a(std::move(elems));
    const auto base = stabilization_onset(QSet::from_parts(1, a), 30);
    for (Elem g : {2, 3, 5}) {
      const auto scaled =
          stabilization_onset(QSet::from_parts(1, scale(a, g)), 30);
      CHECK(scaled.h_min == base.h_min);
    }
  }
}
