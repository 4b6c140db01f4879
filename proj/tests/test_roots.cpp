#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dmh/error.hpp"
#include "dmh/format.hpp"
#include "dmh/reference.hpp"
#include "dmh/roots.hpp"

using namespace dmh;

namespace {
QPoly P(const char* s) { return parse_poly(s); }

Rational distance(const std::string& a, const std::string& b) { return abs(parse_decimal(a) - parse_decimal(b)); }
}  // namespace

TEST_CASE("square-free decomposition") {
  const auto d = squarefree_decomposition(P("t^5+t^4"));  // t^4 (t+1)
  REQUIRE(d.size() == 2);
  CHECK(d[0] == std::make_pair(P("t+1"), 1));
  CHECK(d[1] == std::make_pair(P("t"), 4));
  CHECK(squarefree_part(P("2t^3-2t")) == P("t^3-t"));
  CHECK_THROWS_AS(squarefree_part(QPoly()), Error);
}

TEST_CASE("real-rootedness") {
  CHECK_FALSE(is_real_rooted(P("t^2+1")));
  CHECK(is_real_rooted(P("t^2+t")));
  CHECK(is_real_rooted(P("50t^3+128t^2+50t")));
  CHECK(is_real_rooted(P("3")));
  CHECK(is_real_rooted(P("(t-1)^3(t+2)^2")));
  CHECK_FALSE(is_real_rooted(P("(t^2+1)(t-1)")));
  CHECK_THROWS_AS(is_real_rooted(QPoly()), Error);
  // Scaling invariance.
  CHECK(is_real_rooted(P("-7t^2+7/2t")));
}

TEST_CASE("isolation") {
  auto b = isolate_real_roots(P("t^2-2"));
  REQUIRE(b.size() == 2);
  CHECK(b[0].low >= -2);
  CHECK(b[0].high <= -1);
  CHECK(b[1].low >= 1);
  CHECK(b[1].high <= 2);
  b = isolate_real_roots(P("t^2"));
  REQUIRE(b.size() == 1);
  CHECK(b[0].exact());
  CHECK(b[0].low == 0);
  CHECK(b[0].multiplicity == 2);
  b = isolate_real_roots(P("t+3t^2+t^3"));
  REQUIRE(b.size() == 3);
  CHECK(b[2].exact());
  CHECK(b[0].low >= -3);
  CHECK(b[1].high < 0);
  // Rational roots hit by bisection get exact boxes.
  b = isolate_real_roots(P("(t-1/2)^2(t+3/4)(t-5)"));
  int total = 0;
  for (const auto& x : b) total += x.multiplicity;
  CHECK(total == 4);
  for (std::size_t i = 1; i < b.size(); ++i) CHECK(b[i - 1].high <= b[i].low);
}

TEST_CASE("refinement") {
  const QPoly p = P("t^2-2");
  const auto b = isolate_real_roots(p);
  CHECK(refine_root(p, b[1], 9) == "1.414213562");
  CHECK(refine_root(p, b[0], 5) == "-1.41421");
  CHECK_THROWS_AS(refine_root(p, RootBox{Rational(3), Rational(4), 1}, 5), Error);
  CHECK(real_root_decimals(P("t^3+t^2"), 3) == std::vector<std::string>{"-1", "0", "0"});
  CHECK(real_root_decimals(P("t-1/8"), 2) == std::vector<std::string>{"0.13"});
}

TEST_CASE("interlacing") {
  CHECK(interlaces(P("1"), P("t+1")));
  const auto v = interlace_verdict(P("t+t^2"), P("t+3t^2+t^3"));
  CHECK(v.weak);
  CHECK_FALSE(v.strict);
  CHECK(interlace_verdict(P("t"), P("t^2-1")).strict);
  CHECK_FALSE(interlaces(P("t-5"), P("t^2-1")));
  CHECK_THROWS_AS(interlaces(P("t^2+1"), P("t^3")), Error);
  CHECK_THROWS_AS(interlaces(P("t"), P("t^3-t")), Error);
  // Antisymmetry in degree and scaling invariance.
  CHECK_THROWS_AS(interlaces(P("t+3t^2+t^3"), P("t+t^2")), Error);
  CHECK(interlaces(P("-3t-3t^2"), P("2t+6t^2+2t^3")));
  // Double roots: (t+1)^2 against (t+1)^2 t.
  CHECK(interlaces(P("(t+1)^2"), P("(t+1)^2t")));
  CHECK_FALSE(interlaces(P("(t+1)^2"), P("(t+2)(t-1)t")));
}

TEST_CASE("scans on small ranges") {
  const auto m = conjecture_scan(Family::Monotone, {0, 1}, 3, 6, {}, 2);
  CHECK(m.passed());
  CHECK(m.checks > 0);
  const auto d = conjecture_scan(Family::Dessin, {0, 1}, 2, 6, {}, 2);
  CHECK(d.passed());
  const auto empty = conjecture_scan(Family::Monotone, {}, 3, 6, {});
  CHECK(empty.entries.empty());
  CHECK(empty.passed());
}

TEST_CASE("large genus root table") {
  const auto table = largeg_root_table({18, 19, 20}, {4, 2, 1}, 12, 3);
  const auto& ref = reference_root_rows_421();
  REQUIRE(table.rows.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& row = table.rows[i];
    const auto& expect = ref[ref.size() - 3 + i];
    REQUIRE(row.roots.size() == 6);
    for (std::size_t j = 0; j < 6; ++j) CHECK(distance(row.roots[j], expect.roots[j]) < Rational(1, 10000000000));
  }
  CHECK(table.rows[2].roots[2] == "-1");
  CHECK(table.rows[2].roots[5] == "0");
  CHECK(table.limits == std::vector<Rational>{-5, -2, -1, Rational(-1, 2), Rational(-1, 5), 0});
}
