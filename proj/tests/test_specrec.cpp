#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dmh/error.hpp"
#include "dmh/format.hpp"
#include "dmh/specrec.hpp"

using namespace dmh;

namespace {

QPoly T(const char* s) { return parse_poly(s); }

void cross_check(Family f, int g, int n, int mu_max) {
  const auto c = build_curve(f);
  const auto table = extract_coefficients(c, g, n, mu_max);
  for (const auto& [mu, v] : table) {
    INFO(family_name(f), " g=", g, " mu=", mu.to_string());
    CHECK(v == hurwitz_value({f, g, mu}));
  }
}

}  // namespace

TEST_CASE("curves") {
  for (Family f : {Family::Monotone, Family::Dessin}) {
    const auto c = build_curve(f);
    CHECK(curve_equation_holds(c));
    CHECK(curve_invariants_hold(c));
    CHECK(to_string(c.branch_points[0], 's') == to_string(SField(1) / parse_ratfn("1-s", 's'), 's'));
  }
}

TEST_CASE("to_t_poly") {
  CHECK(to_t_poly(parse_ratfn("3s^4+s^2", 's')) == T("3t^2+t"));
  CHECK_THROWS_AS(to_t_poly(parse_ratfn("s", 's')), Error);
  CHECK_THROWS_AS(to_t_poly(parse_ratfn("1/(1+s^2)", 's')), Error);
}

TEST_CASE("unstable extraction") {
  const auto m = build_curve(Family::Monotone);
  const auto one = extract_coefficients(m, 0, 1, 11);
  for (int mu = 1; mu <= 10; ++mu) CHECK(one.at(Partition{mu + 1}) * Rational(mu + 1) == narayana(mu));
  cross_check(Family::Dessin, 0, 1, 8);
  cross_check(Family::Monotone, 0, 2, 6);
  cross_check(Family::Dessin, 0, 2, 6);
}

TEST_CASE("stable correlators") {
  const auto m = build_curve(Family::Monotone);
  const auto d = build_curve(Family::Dessin);
  CHECK(extract_coefficients(m, 0, 3, 1).at(Partition{1, 1, 1}) == T("4t^2+4t"));
  CHECK(extract_coefficients(d, 1, 1, 3).at(Partition{3}) == T("t/3"));
  for (Family f : {Family::Monotone, Family::Dessin}) {
    const auto c = build_curve(f);
    for (auto [g, n] : {std::pair{0, 3}, {1, 1}, {0, 4}, {1, 2}}) {
      const auto& w = tr_correlator(c, g, n);
      CHECK(w.g == g);
      CHECK(!w.terms.empty());
      CHECK(is_symmetric(w));
      CHECK(is_even_in_s(w));
      cross_check(f, g, n, 5);
    }
  }
}

TEST_CASE("w11 closed form") {
  const auto w = verify_w11(build_curve(Family::Monotone));
  MESSAGE("printed ", w.matches_printed, " negated ", w.matches_negated);
  CHECK(w.ode_residual_zero);
  CHECK(w.t1_reduction);
  CHECK(w.ok());
  CHECK(w.matches_printed != w.matches_negated);
}

TEST_CASE("errors and output") {
  const auto m = build_curve(Family::Monotone);
  CHECK_THROWS_AS(tr_correlator(m, 3, 1), Error);
  CHECK_THROWS_AS(tr_correlator(m, 0, 0), Error);
  CHECK_THROWS_AS(correlator_function(m, tr_correlator(m, 0, 3)), Error);
  const std::string s = to_string(tr_correlator(m, 0, 3), m);
  CHECK(s.find("z3") != std::string::npos);
  CHECK(to_string(Correlator{}, m) == "0");
  CHECK(extract_coefficients(m, 1, 1, 0).empty());
}
