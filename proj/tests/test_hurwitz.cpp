#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dmh/error.hpp"
#include "dmh/format.hpp"
#include "dmh/hurwitz.hpp"
#include "dmh/oracles.hpp"
#include "dmh/reference.hpp"

using namespace dmh;

namespace {
QPoly P(const char* s) { return parse_poly(s); }

bool palindromic(const QPoly& p, int darga) {
  for (int i = 0; i <= darga; ++i)
    if (p.coeff(static_cast<std::size_t>(i)) != p.coeff(static_cast<std::size_t>(darga - i))) return false;
  return true;
}
}  // namespace

TEST_CASE("published tables reproduced by cut-and-join") {
  for (const auto& cell : reference_hurwitz_cells()) {
    const Partition mu = parse_partition(cell.mu);
    CAPTURE(cell.mu);
    CAPTURE(cell.g);
    CHECK(times_mu(mu, hurwitz_value({cell.family, cell.g, mu})) == P(cell.times_mu_value.c_str()));
  }
}

TEST_CASE("monotone examples") {
  CHECK(monotone_H(0, {1}) == P("1"));
  CHECK(monotone_H(1, {3}) == P("(5t^2+5t)/3"));
  CHECK(monotone_H(0, {2, 1}) == P("t^2+t"));
  CHECK(monotone_H(0, {1, 2}) == monotone_H(0, {2, 1}));
  CHECK(monotone_H(-1, {2}).is_zero());
}

TEST_CASE("dessin examples") {
  CHECK(dessin_D(0, {1}) == P("t"));
  CHECK(dessin_D(0, {2, 2}) == P("t^3+5t^2/2+t"));
  CHECK(dessin_D(1, {2}).is_zero());
  // Vanishing below |mu| = 2g + n and palindromic otherwise.
  for (int g = 0; g <= 2; ++g)
    for (int k = 1; k <= 7; ++k)
      for (const auto& mu : partitions_of(k)) {
        const QPoly d = dessin_D(g, mu);
        const int deg = k + 1 - 2 * g - mu.length();
        if (k < 2 * g + mu.length()) {
          CHECK(d.is_zero());
        } else if (!d.is_zero()) {
          CHECK(d.degree() == deg);
          CHECK(palindromic(d, deg + 1));
        }
      }
}

TEST_CASE("cut-and-join agrees with the factorisation oracle") {
  for (int k = 1; k <= 6; ++k)
    for (const auto& mu : partitions_of(k))
      for (int g = 0; k + 2 * g - 2 + mu.length() <= 7; ++g) {
        const int r = k + 2 * g - 2 + mu.length();
        if (r < 0) continue;
        CAPTURE(mu.to_string());
        CAPTURE(g);
        const auto counts = weighted_counts(canonical_permutation(mu), r, true);
        CHECK(times_mu(mu, monotone_H(g, mu)) == counts[static_cast<std::size_t>(r)]);
      }
}

TEST_CASE("dessin cut-and-join agrees with pair enumeration") {
  for (int k = 1; k <= 5; ++k)
    for (const auto& mu : partitions_of(k))
      for (int g = 0; 2 * g + mu.length() <= k; ++g) {
        CAPTURE(mu.to_string());
        CHECK(dessin_D(g, mu) == dessin_connected_count(mu, g));
      }
}

TEST_CASE("one-point recursion") {
  CHECK(one_point_H(0, 3) == P("(t^2+t)/3"));
  CHECK(one_point_H(1, 4) == P("(15t^3+40t^2+15t)/4"));
  for (int g = 0; g <= 3; ++g) CHECK(one_point_H(g, 2) == P("t/2"));
  for (int g = 0; g <= 3; ++g)
    for (int d = 1; d <= 8; ++d) CHECK(one_point_H(g, d) == monotone_H(g, {d}));
  CHECK_THROWS_AS(one_point_H(0, 0), Error);
}

TEST_CASE("genus one three-term relation") {
  const QPoly t1 = P("t+1"), tm = P("t-1");
  for (int d = 3; d <= 9; ++d) {
    const QPoly lhs = monotone_H(1, {d}) * Rational(d * (d - 2));
    const QPoly rhs = t1 * monotone_H(1, {d - 1}) * Rational((d - 1) * (2 * d - 1)) -
                      tm * tm * monotone_H(1, {d - 2}) * Rational((d - 2) * (d + 1));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Lambda-polynomial structure") {
  for (int g = 0; g <= 2; ++g)
    for (int k = 2; k <= 7; ++k)
      for (const auto& mu : partitions_of(k)) {
        const QPoly h = monotone_H(g, mu);
        CHECK(h.degree() == k - 1);
        CHECK(is_zero(h.coeff(0)));
        CHECK(palindromic(h, k));
        for (int i = 1; i <= k - 1; ++i) CHECK(h.coeff(static_cast<std::size_t>(i)) > 0);
      }
}

TEST_CASE("character formulas and the connected bridge") {
  CHECK(disconnected_table(Family::Monotone, 3, {2}) == P("t/2"));
  CHECK(disconnected_table(Family::Monotone, 0, {1}) == P("1"));
  CHECK(disconnected_table(Family::Monotone, -1, {1, 1}) == P("1"));
  CHECK(connected_from_disconnected(Family::Monotone, -1, {1, 1}).is_zero());
  CHECK(disconnected_table(Family::Monotone, 0, {1, 1}) == P("t"));
  for (const Family f : {Family::Monotone, Family::Dessin})
    for (int k = 1; k <= 5; ++k)
      for (const auto& mu : partitions_of(k))
        for (int g = -2; g <= 2; ++g) {
          CAPTURE(mu.to_string());
          CAPTURE(g);
          CHECK(disconnected_table(f, g, mu) == disconnected_from_connected(f, g, mu));
          if (g >= 0) CHECK(connected_from_disconnected(f, g, mu) == hurwitz_value({f, g, mu}));
        }
  CHECK_THROWS_AS(disconnected_table(Family::Monotone, 0, {9}), Error);
}

TEST_CASE("Narayana identity") {
  CHECK(narayana(1) == P("t"));
  CHECK(narayana(3) == P("t^3+3t^2+t"));
  for (int m = 1; m <= 10; ++m) CHECK(monotone_H(0, {m + 1}) * Rational(m + 1) == narayana(m));
}

TEST_CASE("parallel evaluation matches serial") {
  std::vector<HurwitzKey> keys;
  for (int k = 1; k <= 6; ++k)
    for (const auto& mu : partitions_of(k)) keys.push_back({Family::Dessin, 1, mu});
  const auto par = hurwitz_values(keys, 4);
  for (std::size_t i = 0; i < keys.size(); ++i) CHECK(par[i] == hurwitz_value(keys[i]));
}
