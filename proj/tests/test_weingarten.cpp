#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dmh/error.hpp"
#include "dmh/format.hpp"
#include "dmh/weingarten.hpp"

#include <random>

using namespace dmh;

namespace {

MNRational W(const char* s) { return parse_mnrational(s); }
QRatFn U(const char* s) { return parse_ratfn(s, 'N'); }
Permutation C(const char* s, int k) { return parse_cycles(s, k); }

struct Row {
  const char* sigma;
  int k;
  const char* unitary;
  const char* grassmannian;
};

// The published Weingarten table, k <= 4.
const Row kTable[] = {
    {"", 0, "1", "1"},
    {"(1)", 1, "1/N", "M/N"},
    {"(1)(2)", 2, "1/(N^2-1)", "M(MN-1)/(N(N^2-1))"},
    {"(12)", 2, "-1/(N(N^2-1))", "-M(M-N)/(N(N^2-1))"},
    {"(1)(2)(3)", 3, "(N^2-2)/(N(N^2-1)(N^2-4))", "M(M^2N^2-2M^2-3MN+4)/(N(N^2-1)(N^2-4))"},
    {"(12)(3)", 3, "-1/((N^2-1)(N^2-4))", "-M(M-N)(MN-2)/(N(N^2-1)(N^2-4))"},
    {"(123)", 3, "2/(N(N^2-1)(N^2-4))", "M(M-N)(2M-N)/(N(N^2-1)(N^2-4))"},
    {"(1)(2)(3)(4)", 4, "(N^4-8N^2+6)/(N^2(N^2-1)(N^2-4)(N^2-9))",
     "M(M^3N^4-8M^3N^2+6M^3-6M^2N^3+24M^2N+19MN^2-6M-30N)/(N^2(N^2-1)(N^2-4)(N^2-9))"},
    {"(12)(3)(4)", 4, "-1/(N(N^2-1)(N^2-9))", "-M(M-N)(M^2N^2-4M^2-5MN+10)/(N(N^2-1)(N^2-4)(N^2-9))"},
    {"(12)(34)", 4, "(N^2+6)/(N^2(N^2-1)(N^2-4)(N^2-9))",
     "M(M-N)(M^2N^2+6M^2-MN^3-6MN+4N^2-6)/(N^2(N^2-1)(N^2-4)(N^2-9))"},
    {"(123)(4)", 4, "(2N^2-3)/(N^2(N^2-1)(N^2-4)(N^2-9))",
     "M(M-N)(2M^2N^2-3M^2-MN^3-6MN+3N^2+3)/(N^2(N^2-1)(N^2-4)(N^2-9))"},
    {"(1234)", 4, "-5/(N(N^2-1)(N^2-4)(N^2-9))", "-M(M-N)(5M^2-5MN+N^2+1)/(N(N^2-1)(N^2-4)(N^2-9))"},
};

}  // namespace

TEST_CASE("character formula reproduces the published table") {
  for (const auto& row : kTable) {
    CAPTURE(std::string(row.sigma));
    const Permutation s = C(row.sigma, row.k);
    CHECK(sw_character(s) == W(row.grassmannian));
    CHECK(uw_leading(s) == U(row.unitary));
  }
}

TEST_CASE("orthogonality solve reproduces the published table") {
  for (const auto& row : kTable) {
    CAPTURE(std::string(row.sigma));
    const Permutation s = C(row.sigma, row.k);
    CHECK(sw_orthogonality_table(row.k).values.at(cycle_type(s)) == W(row.grassmannian));
  }
}

TEST_CASE("worked example from the orthogonality relations") {
  const auto t3 = sw_orthogonality_table(3);
  const MNRational M = MNRational::M(), N = MNRational::N();
  const MNRational w12 = sw_character(C("(12)", 2));
  CHECK(t3.values.at(Partition{2, 1}) == (M * N - 2) / (N * N - 4) * w12);
  CHECK(t3.values.at(Partition{3}) == (N - 2 * M) / (N * N - 4) * w12);
}

TEST_CASE("methods agree and residuals vanish for k <= 5") {
  for (int k = 0; k <= 5; ++k) {
    const auto orth = sw_orthogonality_table(k);
    const auto chr = sw_character_table(k);
    CHECK(orth.values == chr.values);
    for (const auto& nu : partitions_of(k)) CHECK(orthogonality_residual(canonical_permutation(nu)).is_zero());
  }
}

TEST_CASE("conjugacy invariance") {
  std::mt19937 rng(5);
  for (int it = 0; it < 10; ++it) {
    std::vector<int> v{0, 1, 2, 3, 4}, w{0, 1, 2, 3, 4};
    std::shuffle(v.begin(), v.end(), rng);
    std::shuffle(w.begin(), w.end(), rng);
    const Permutation s(v), g(w);
    CHECK(sw_character(compose(compose(g, s), g.inverse())) == sw_character(s));
  }
}

TEST_CASE("convolution_integral") {
  CHECK(convolution_integral({1}, {2}).is_zero());
  CHECK(convolution_integral({1}, {1}) == W("M/N"));
  CHECK(convolution_integral({1, 1}, {1, 1}) == W("M(M+1)/(N(N+1))"));
  CHECK(convolution_integral({1, 2}, {1, 2}) == W("M(MN-1)/(N(N^2-1))"));
  CHECK(convolution_integral({1, 2}, {2, 1}) == W("-M(M-N)/(N(N^2-1))"));
  CHECK_THROWS_AS(convolution_integral({1, 2}, {1}), Error);
}

TEST_CASE("largeN_check") {
  CHECK(largeN_check(C("(1)", 1), 6));
  CHECK(largeN_check(C("(12)", 2), 3));
  CHECK(largeN_check(C("(1)(2)", 2), 2));
  CHECK(largeN_check(C("(123)(45)", 5), 4));
}

TEST_CASE("Jucys-Murphy form of the Weingarten function") {
  CHECK(jucys_murphy_weingarten_check(3, Rational(7, 3), Rational(11, 2)));
  CHECK(jucys_murphy_weingarten_check(4, Rational(-2, 5), Rational(13, 3)));
}
