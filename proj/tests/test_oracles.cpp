#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dmh/error.hpp"
#include "dmh/format.hpp"
#include "dmh/oracles.hpp"

#include <algorithm>
#include <random>

using namespace dmh;

namespace {
QPoly P(const char* s) { return parse_poly(s); }
using Pairs = std::vector<std::pair<int, int>>;
}  // namespace

TEST_CASE("enumerate_monotone examples") {
  auto e = enumerate_monotone(Permutation::identity(1), 0);
  REQUIRE(e.size() == 1);
  CHECK(e[0].transpositions.empty());
  CHECK(enumerate_monotone(parse_cycles("(1 2)"), 2).empty());
  auto f = enumerate_monotone(parse_cycles("(1 2 3)"), 2);
  REQUIRE(f.size() == 2);
  CHECK(f[0].transpositions == Pairs{{1, 2}, {2, 3}});
  CHECK(f[1].transpositions == Pairs{{2, 3}, {1, 3}});
  for (const auto& x : f) CHECK(x.product(3) == parse_cycles("(1 2 3)"));
  CHECK_THROWS_AS(enumerate_monotone(Permutation::identity(10), 0), Error);
  CHECK_THROWS_AS(enumerate_monotone(Permutation::identity(3), 11), Error);
}

TEST_CASE("every enumerated sequence is monotone with the right product") {
  const Permutation s = parse_cycles("(1 3)(2 4)", 5);
  for (int r = 0; r <= 6; ++r) {
    auto all = enumerate_monotone(s, r);
    if ((r - 2) % 2 != 0) CHECK(all.empty());
    for (const auto& f : all) {
      CHECK(f.product(5) == s);
      for (std::size_t i = 1; i < f.transpositions.size(); ++i)
        CHECK(f.transpositions[i - 1].second <= f.transpositions[i].second);
      if (f.length() > 0) {
        CHECK(f.hive() >= 1);
        CHECK(f.hive() <= std::min(r, 4));
      }
    }
    CHECK(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) {
      return a.transpositions < b.transpositions;
    }));
  }
}

TEST_CASE("weighted_counts") {
  auto w = weighted_counts(parse_cycles("(1 2)"), 3, false);
  CHECK(w == std::vector<QPoly>{QPoly(), P("t"), QPoly(), P("t")});
  CHECK(weighted_counts(Permutation::identity(2), 2, true)[2] == P("t"));
  CHECK(weighted_counts(parse_cycles("(1 2 3)"), 2, true)[2] == P("t^2+t"));
  // Transitive counts are bounded by all counts.
  const Permutation s = parse_cycles("(1 2)(3)(4)");
  auto all = weighted_counts(s, 6, false), tr = weighted_counts(s, 6, true);
  for (std::size_t r = 0; r < all.size(); ++r)
    for (std::size_t i = 0; i < all[r].size(); ++i) CHECK(tr[r].coeff(i) <= all[r].coeff(i));
}

TEST_CASE("weighted_counts depend only on cycle type") {
  std::mt19937 rng(11);
  for (int it = 0; it < 6; ++it) {
    std::vector<int> v{0, 1, 2, 3, 4}, w{0, 1, 2, 3, 4};
    std::shuffle(v.begin(), v.end(), rng);
    std::shuffle(w.begin(), w.end(), rng);
    const Permutation s(v), g(w);
    const Permutation c = compose(compose(g, s), g.inverse());
    CHECK(weighted_counts(s, 5, true) == weighted_counts(c, 5, true));
  }
}

TEST_CASE("strictly_monotone") {
  CHECK(strictly_monotone(Permutation::identity(3)).transpositions.empty());
  CHECK(strictly_monotone(parse_cycles("(1 2)")).transpositions == Pairs{{1, 2}});
  CHECK(strictly_monotone(parse_cycles("(1 2 3)")).transpositions == Pairs{{1, 2}, {2, 3}});
  for (int k = 1; k <= 6; ++k) {
    for (const auto& s : all_permutations(k)) {
      const int r = k - s.cycle_count();
      int strict = 0;
      for (const auto& f : enumerate_monotone(s, r)) {
        bool inc = true;
        for (std::size_t i = 1; i < f.transpositions.size(); ++i)
          inc = inc && f.transpositions[i - 1].second < f.transpositions[i].second;
        strict += inc;
      }
      CHECK(strict == 1);
      CHECK(strictly_monotone(s).product(k) == s);
    }
  }
}

TEST_CASE("dessin oracle") {
  CHECK(dessin_disconnected_count(Partition{1}, 0) == P("t"));
  CHECK(dessin_disconnected_count(Partition{2}, 0) == P("(t^2+t)/2"));
  CHECK(dessin_disconnected_count(Partition{1, 1}, -1) == P("t^2"));
  CHECK(dessin_connected_count(Partition{2, 2}, 0) == P("t^3+5t^2/2+t"));
  CHECK(dessin_connected_count(Partition{3}, 1) == P("t/3"));
  CHECK(dessin_connected_count(Partition{1}, 1).is_zero());
  // Vanishing below the Euler bound.
  CHECK(dessin_connected_count(Partition{2, 1}, 1).is_zero());
  CHECK_THROWS_AS(dessin_connected_count(Partition{8}, 0), Error);
}
