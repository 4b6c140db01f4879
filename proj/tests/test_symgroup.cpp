#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dmh/error.hpp"
#include "dmh/symgroup.hpp"

#include <algorithm>
#include <random>

using namespace dmh;

TEST_CASE("compose is right to left") {
  const Permutation a = parse_cycles("(1 2)", 3), b = parse_cycles("(2 3)", 3);
  CHECK(compose(a, b) == parse_cycles("(1 2 3)", 3));
  const Permutation s = parse_cycles("(1 3)(2 4 5)", 5);
  CHECK(compose(Permutation::identity(5), s) == s);
  CHECK(compose(parse_cycles("(13)", 3), parse_cycles("(13)", 3)).is_identity());
  CHECK_THROWS_AS(compose(a, Permutation::identity(4)), Error);
}

TEST_CASE("cycle notation") {
  CHECK(parse_cycles("(123)(45)") == parse_cycles(" ( 1 2 3 ) (4,5) "));
  CHECK(parse_cycles("(1 2)", 4).degree() == 4);
  CHECK(parse_cycles("(1 3)", 3).to_string() == "(1 3)(2)");
  CHECK(Permutation().to_string() == "( )");
  CHECK(parse_cycles("", 0).degree() == 0);
  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)"), Error);
  CHECK_THROWS_AS(parse_cycles("(1 5)", 3), Error);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0}), Error);
}

TEST_CASE("cycle_type") {
  CHECK(cycle_type(parse_cycles("(1 2 3)(4 5)")) == Partition{3, 2});
  CHECK(cycle_type(Permutation::identity(4)) == Partition{1, 1, 1, 1});
  CHECK(cycle_type(parse_cycles("(1 2)", 4)) == Partition{2, 1, 1});
  CHECK(cycle_type(canonical_permutation(Partition{2, 3, 1})) == Partition{3, 2, 1});
  CHECK(canonical_permutation(Partition{2, 1}) == parse_cycles("(1 2)", 3));
}

TEST_CASE("cycle type is a conjugacy invariant") {
  std::mt19937 rng(3);
  for (int it = 0; it < 100; ++it) {
    const int k = 1 + static_cast<int>(rng() % 8);
    std::vector<int> v(static_cast<std::size_t>(k)), w(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] = i;
    std::shuffle(v.begin(), v.end(), rng);
    std::shuffle(w.begin(), w.end(), rng);
    const Permutation s(v), g(w);
    CHECK(cycle_type(compose(compose(g, s), g.inverse())) == cycle_type(s));
  }
}

TEST_CASE("partitions_of") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(6).size() == 11);
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(0)[0].empty());
  const auto p4 = partitions_of(4);
  CHECK(p4[0] == Partition{4});
  CHECK(p4[1] == Partition{3, 1});
  CHECK(p4[2] == Partition{2, 2});
  CHECK(p4[3] == Partition{2, 1, 1});
  CHECK(p4[4] == Partition{1, 1, 1, 1});
  CHECK_THROWS_AS(partitions_of(-1), Error);
  CHECK_THROWS_AS(Partition({2, 0}), Error);
  CHECK(parse_partition("(4, 2,1)") == Partition{4, 2, 1});
}

TEST_CASE("partition_data") {
  auto row = partition_data(Partition{4});
  CHECK(row.dimension == 1);
  CHECK(row.contents == std::vector<int>{0, 1, 2, 3});
  auto col = partition_data(Partition{1, 1});
  CHECK(col.dimension == 1);
  CHECK(col.contents == std::vector<int>{0, -1});
  auto hook = partition_data(Partition{2, 1});
  CHECK(hook.dimension == 2);
  auto c = hook.contents;
  std::sort(c.begin(), c.end());
  CHECK(c == std::vector<int>{-1, 0, 1});
  CHECK(partition_data(Partition{3, 2, 1}).dimension == 16);
}

TEST_CASE("mn_character") {
  for (const auto& mu : partitions_of(5)) {
    CHECK(mn_character(Partition{5}, mu) == 1);
    const int sign = (5 - mu.length()) % 2 ? -1 : 1;
    CHECK(mn_character(Partition{1, 1, 1, 1, 1}, mu) == sign);
  }
  CHECK(mn_character(Partition{2, 1}, Partition{3}) == -1);
  CHECK(mn_character(Partition{2, 1}, Partition{2, 1}) == 0);
  CHECK(mn_character(Partition{2, 2}, Partition{2, 2}) == 2);
  CHECK(mn_character(Partition{3, 2, 1}, Partition{3, 3}) == -2);
  CHECK_THROWS_AS(mn_character(Partition{2}, Partition{1}), Error);
  for (int k = 0; k <= 7; ++k) {
    std::vector<int> ones(static_cast<std::size_t>(k), 1);
    for (const auto& lambda : partitions_of(k))
      CHECK(Integer(mn_character(lambda, Partition(ones))) == partition_data(lambda).dimension);
  }
}

TEST_CASE("character orthogonality") {
  for (int k = 0; k <= 8; ++k) {
    Integer s = 0;
    for (const auto& lambda : partitions_of(k)) s += partition_data(lambda).dimension * partition_data(lambda).dimension;
    CHECK(s == factorial(static_cast<unsigned>(k)));
  }
  for (int k = 1; k <= 7; ++k) {
    const auto parts = partitions_of(k);
    for (const auto& a : parts)
      for (const auto& b : parts) {
        Integer s = 0;
        for (const auto& mu : parts) s += class_size(mu) * mn_character(a, mu) * mn_character(b, mu);
        CHECK(s == (a == b ? factorial(static_cast<unsigned>(k)) : Integer(0)));
      }
  }
}

TEST_CASE("class sizes") {
  CHECK(z_mu(Partition{2, 2}) == 8);
  CHECK(class_size(Partition{2, 2}) == 3);
  CHECK(class_size(Partition{3, 1}) == 8);
  Integer total = 0;
  for (const auto& mu : partitions_of(6)) total += class_size(mu);
  CHECK(total == 720);
}

TEST_CASE("group algebra") {
  const auto perms = all_permutations(4);
  CHECK(perms.size() == 24);
  for (std::size_t i = 0; i < perms.size(); ++i) CHECK(permutation_rank(perms[i]) == i);
  // Jucys-Murphy elements commute.
  GroupElement a = jucys_murphy(3, 4), b = jucys_murphy(4, 4);
  CHECK(ga_multiply(a, b, 4) == ga_multiply(b, a, 4));
}

TEST_CASE("jucys_cycle_identity_check") {
  for (int k = 1; k <= 5; ++k) CHECK(jucys_cycle_identity_check(k, k));
  CHECK_THROWS_AS(jucys_cycle_identity_check(7, 1), Error);
}
