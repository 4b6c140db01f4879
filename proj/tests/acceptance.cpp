// Acceptance run: one PASS/FAIL line per criterion, timed against its budget.

#include "dmh/error.hpp"
#include "dmh/format.hpp"
#include "dmh/hurwitz.hpp"
#include "dmh/oracles.hpp"
#include "dmh/reference.hpp"
#include "dmh/roots.hpp"
#include "dmh/specrec.hpp"
#include "dmh/symgroup.hpp"
#include "dmh/weingarten.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <random>
#include <sstream>
#include <thread>

using namespace dmh;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  bool only_source_conflict = false;  // the sole failing clause is contradicted by the source itself
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Outcome()> run;
  // Set when the criterion cannot hold as worded because the published source
  // contradicts itself; the line still reads FAIL.
  std::string known_source_error;
};

int threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

struct Tally {
  int total = 0;
  int bad = 0;
  std::string first;

  void check(bool ok, const std::string& what) {
    ++total;
    if (!ok && bad++ == 0) first = what;
  }
  Outcome outcome(const std::string& unit) const {
    std::ostringstream s;
    s << (total - bad) << "/" << total << " " << unit;
    if (bad) s << "; first failure: " << first;
    return {bad == 0, s.str()};
  }
};

// Every nonzero coefficient non-negative, palindromic about darga/2, unimodal.
bool lambda_structure(const QPoly& p, int darga, int degree) {
  if (p.is_zero() || p.degree() != degree) return false;
  for (int i = 0; i <= darga; ++i) {
    const Rational a = p.coeff(static_cast<std::size_t>(i));
    if (sgn(a) < 0 || a != p.coeff(static_cast<std::size_t>(darga - i))) return false;
  }
  bool falling = false;
  for (int i = 1; i <= darga; ++i) {
    const Rational a = p.coeff(static_cast<std::size_t>(i - 1)), b = p.coeff(static_cast<std::size_t>(i));
    if (b < a) falling = true;
    else if (b > a && falling) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Outcome c1_monotone_goldens() {
  Tally t;
  for (const auto& cell : reference_hurwitz_cells()) {
    if (cell.family != Family::Monotone) continue;
    const Partition mu = parse_partition(cell.mu);
    t.check(times_mu(mu, monotone_H(cell.g, mu)) == parse_poly(cell.times_mu_value), "g=" + std::to_string(cell.g) + " " + cell.mu);
  }
  return t.outcome("monotone cells (g <= 3)");
}

Outcome c2_dessin_goldens() {
  Tally t;
  t.check(dessin_D(0, Partition{1}) == parse_poly("t"), "seed D_0(1) = t");
  for (const auto& cell : reference_hurwitz_cells()) {
    if (cell.family != Family::Dessin) continue;
    const Partition mu = parse_partition(cell.mu);
    t.check(times_mu(mu, dessin_D(cell.g, mu)) == parse_poly(cell.times_mu_value), "g=" + std::to_string(cell.g) + " " + cell.mu);
  }
  return t.outcome("dessin cells (g <= 1) plus the seed");
}

Outcome c3_weingarten() {
  Tally t;
  std::map<int, WeingartenTable> ortho;
  for (const auto& row : reference_weingarten()) {
    const Permutation sigma = parse_cycles(row.sigma, row.k);
    if (!ortho.count(row.k)) ortho.emplace(row.k, sw_orthogonality_table(row.k));
    const MNRational s_pub = parse_mnrational(row.grassmannian);
    const QRatFn u_pub = parse_ratfn(row.unitary, 'N');
    const MNRational by_char = sw_character(sigma);
    const MNRational by_orth = ortho.at(row.k).values.at(cycle_type(sigma));
    const std::string tag = row.sigma.empty() ? "()" : row.sigma;
    t.check(by_char == s_pub, "Wg^S character " + tag);
    t.check(by_orth == s_pub, "Wg^S orthogonality " + tag);
    // Wg^U is the leading coefficient in M of Wg^S.
    t.check(uw_leading(sigma) == u_pub, "Wg^U character " + tag);
    t.check(by_orth.den_is_m_free() && QRatFn(by_orth.num().leading(), by_orth.den()[0]) == u_pub,
            "Wg^U orthogonality " + tag);
  }
  for (int k = 0; k <= 5; ++k) {
    const auto a = sw_character_table(k), b = sw_orthogonality_table(k);
    t.check(a.values == b.values, "methods disagree at k=" + std::to_string(k));
  }
  return t.outcome("checks (published k <= 4 by both methods, agreement k <= 5)");
}

Outcome c4_monotone_oracle() {
  Tally t;
  for (int k = 1; k <= 10; ++k)
    for (const auto& mu : partitions_of(k))
      for (int g = 0;; ++g) {
        const int r = k + 2 * g - 2 + mu.length();
        if (r > 8) break;
        if (r < 0) continue;
        const QPoly oracle = weighted_counts(canonical_permutation(mu), r, true)[static_cast<std::size_t>(r)];
        t.check(oracle == times_mu(mu, monotone_H(g, mu)), "g=" + std::to_string(g) + " " + mu.to_string());
      }
  return t.outcome("(g, mu) with |mu|+2g-2+n <= 8");
}

Outcome c5_dessin_oracle() {
  Tally t;
  for (int k = 1; k <= 6; ++k)
    for (const auto& mu : partitions_of(k)) {
      for (int g = 0; 2 * g <= k + 1; ++g)
        t.check(dessin_connected_count(mu, g) == dessin_D(g, mu), "connected g=" + std::to_string(g) + " " + mu.to_string());
      for (int g = 1 - mu.length(); 2 * g <= k + 1; ++g)
        t.check(dessin_disconnected_count(mu, g) == disconnected_from_connected(Family::Dessin, g, mu),
                "disconnected g=" + std::to_string(g) + " " + mu.to_string());
    }
  return t.outcome("connected and disconnected counts, |mu| <= 6");
}

Outcome c6_large_n() {
  Tally t;
  for (int k = 1; k <= 5; ++k)
    for (const auto& sigma : all_permutations(k)) t.check(largeN_check(sigma, 6), sigma.to_string());
  return t.outcome("permutations with k <= 5 at rmax = 6");
}

Outcome c7_tr() {
  Tally t;
  std::vector<std::future<Tally>> parts;
  for (Family f : {Family::Monotone, Family::Dessin})
    parts.push_back(std::async(std::launch::async, [f] {
      Tally local;
      const SpectralCurve c = build_curve(f);
      local.check(curve_equation_holds(c) && curve_invariants_hold(c), std::string(family_name(f)) + " curve");
      for (int g = 0; g <= 2; ++g)
        for (int n = 1; 2 * g - 2 + n <= 3; ++n) {
          if (2 * g - 2 + n > 0) {
            const auto& w = tr_correlator(c, g, n);
            local.check(is_symmetric(w) && is_even_in_s(w), "symmetry/evenness " + std::to_string(g) + "," + std::to_string(n));
          }
          for (const auto& [mu, v] : extract_coefficients(c, g, n, 6))
            local.check(v == hurwitz_value({f, g, mu}),
                        std::string(family_name(f)) + " g=" + std::to_string(g) + " " + mu.to_string());
        }
      return local;
    }));
  for (auto& p : parts) {
    const Tally x = p.get();
    t.total += x.total;
    if (x.bad && t.bad == 0) t.first = x.first;
    t.bad += x.bad;
  }
  const W11Check w = verify_w11(build_curve(Family::Monotone));
  t.check(w.ode_residual_zero, "ODE residual of the closed form");
  t.check(w.t1_reduction, "closed form at t = 1");
  t.check(w.matches_printed || w.matches_negated, "TR w11 against the closed form up to sign");
  Outcome o = t.outcome("TR coefficients and w11 checks, 2g-2+n <= 3, parts <= 6");
  o.detail += w.matches_printed ? "; w11 equals the printed closed form"
                                : "; w11 equals MINUS the printed closed form, so the exact-match clause fails";
  o.only_source_conflict = o.ok && !w.matches_printed && w.matches_negated;
  o.ok = o.ok && w.matches_printed;
  return o;
}

Outcome c8_one_point() {
  Tally t;
  for (int g = 0; g <= 5; ++g)
    for (int d = 1; d <= 12; ++d) t.check(one_point_H(g, d) == monotone_H(g, Partition{d}), "g=" + std::to_string(g) + " d=" + std::to_string(d));
  const QPoly tp1 = parse_poly("t+1"), tm1sq = parse_poly("t^2-2t+1");
  for (int d = 3; d <= 12; ++d) {
    const QPoly lhs = monotone_H(1, Partition{d}) * Rational(d * (d - 2));
    const QPoly rhs = tp1 * monotone_H(1, Partition{d - 1}) * Rational((d - 1) * (2 * d - 1)) -
                      tm1sq * monotone_H(1, Partition{d - 2}) * Rational((d - 2) * (d + 1));
    t.check(lhs == rhs, "genus-one relation d=" + std::to_string(d));
  }
  return t.outcome("one-point and genus-one checks");
}

Outcome c9_lambda() {
  std::vector<HurwitzKey> keys;
  for (int k = 2; k <= 10; ++k)
    for (const auto& mu : partitions_of(k))
      for (int g = 0; g <= 3; ++g) keys.push_back({Family::Monotone, g, mu});
  const auto values = hurwitz_values(keys, threads());
  Tally t;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const int k = keys[i].mu.weight();
    t.check(lambda_structure(values[i], k, k - 1), "g=" + std::to_string(keys[i].g) + " " + keys[i].mu.to_string());
  }
  return t.outcome("monotone values, 2 <= |mu| <= 10, g <= 3");
}

Outcome c10_narayana() {
  Tally t;
  for (int m = 1; m <= 12; ++m) {
    std::vector<Rational> c(static_cast<std::size_t>(m) + 1);
    for (int i = 1; i <= m; ++i)
      c[static_cast<std::size_t>(i)] = Rational(binomial(static_cast<unsigned>(m), static_cast<unsigned>(i)) *
                                                binomial(static_cast<unsigned>(m), static_cast<unsigned>(i - 1))) /
                                       Rational(m);
    const QPoly nar{std::move(c)};
    t.check(narayana(m) == nar, "Nar_" + std::to_string(m));
    t.check(monotone_H(0, Partition{m + 1}) * Rational(m + 1) == nar, "mu=" + std::to_string(m));
  }
  return t.outcome("identities, mu <= 12");
}

Outcome c11_scans() {
  const ScanReport mono = conjecture_scan(Family::Monotone, {0, 1}, 3, 10, {true, true}, threads());
  const ScanReport des = conjecture_scan(Family::Dessin, {0, 1}, 2, 8, {true, true}, threads());
  std::ostringstream s;
  s << "monotone " << mono.entries.size() << " keys/" << mono.checks << " checks, " << mono.failures.size()
    << " counterexamples; dessin " << des.entries.size() << " keys/" << des.checks << " checks, " << des.failures.size()
    << " counterexamples";
  return {mono.passed() && des.passed() && !mono.entries.empty() && !des.entries.empty(), s.str()};
}

Outcome c12_root_table() {
  std::vector<int> genera;
  for (int g = 10; g <= 20; ++g) genera.push_back(g);
  const RootTable table = largeg_root_table(genera, Partition{4, 2, 1}, 12, threads());
  Tally t;
  const Rational tol = Rational(1, 10000000000);
  for (const auto& ref : reference_root_rows_421()) {
    if (ref.g != 20) continue;
    const auto& mine = table.rows.back();
    t.check(mine.g == 20 && mine.roots.size() == 6, "row g=20 has six roots");
    for (std::size_t i = 0; i < 6 && i < mine.roots.size(); ++i) {
      Rational diff = parse_decimal(mine.roots[i]) - parse_decimal(ref.roots[i]);
      if (sgn(diff) < 0) diff = -diff;
      t.check(diff <= tol, "alpha_" + std::to_string(i + 1) + " " + mine.roots[i] + " vs " + ref.roots[i]);
    }
  }
  // alpha_1 rises toward -5 from below and the gap shrinks with g.
  Rational prev_gap = -1;
  for (const auto& row : table.rows) {
    const Rational a1 = parse_decimal(row.roots.front());
    const Rational gap = Rational(-5) - a1;
    t.check(sgn(gap) > 0, "alpha_1 below -5 at g=" + std::to_string(row.g));
    if (sgn(prev_gap) >= 0) t.check(gap < prev_gap, "alpha_1 gap shrinks at g=" + std::to_string(row.g));
    prev_gap = gap;
  }
  return t.outcome("checks (g = 20 row within 1e-10, monotone alpha_1 for g = 10..20)");
}

Outcome c13_characters() {
  Tally t;
  for (int k = 0; k <= 8; ++k) {
    Integer s = 0;
    for (const auto& lambda : partitions_of(k)) {
      const Integer d = partition_data(lambda).dimension;
      s += d * d;
    }
    t.check(s == factorial(static_cast<unsigned>(k)), "sum dim^2 at k=" + std::to_string(k));
  }
  for (int k = 1; k <= 7; ++k) {
    const auto parts = partitions_of(k);
    for (const auto& a : parts)
      for (const auto& b : parts) {
        Integer s = 0;
        for (const auto& mu : parts) s += class_size(mu) * mn_character(a, mu) * mn_character(b, mu);
        t.check(s == (a == b ? factorial(static_cast<unsigned>(k)) : Integer(0)), "orthogonality " + a.to_string() + b.to_string());
      }
  }
  for (int k = 1; k <= 5; ++k) t.check(jucys_cycle_identity_check(k, k), "Jucys identity k=" + std::to_string(k));
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> num(-40, 40), den(2, 13);
  int redraws = 0;
  for (int k = 1; k <= 4; ++k)
    for (int trial = 0; trial < 5;) {
      const Rational m0 = make_rational(num(rng), den(rng)), n0 = make_rational(num(rng), den(rng));
      try {
        t.check(jucys_murphy_weingarten_check(k, m0, n0), "Jucys-Murphy Weingarten k=" + std::to_string(k));
        ++trial;
      } catch (const Error& e) {
        // Integer N0 with |N0| < k is a pole of Wg: draw again.
        if (e.code() != ErrorCode::DivisionByZero && e.code() != ErrorCode::SingularSystem) throw;
        ++redraws;
      }
    }
  return t.outcome("character-theory checks (" + std::to_string(redraws) + " redraws at poles)");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "monotone appendix goldens", 10, c1_monotone_goldens, ""},
      {2, "dessin appendix goldens", 5, c2_dessin_goldens, ""},
      {3, "Weingarten goldens by two methods", 30, c3_weingarten, ""},
      {4, "monotone oracle equivalence", 120, c4_monotone_oracle, ""},
      {5, "dessin oracle equivalence", 120, c5_dessin_oracle, ""},
      {6, "large-N bridge", 60, c6_large_n, ""},
      {7, "TR cross-check and w11", 300, c7_tr,
       "the printed w11 closed form expands to -t x + ..., while w11 = sum d H_1(d) x^(d-1) starts at "
       "+t x (H_1(2) = t/2 in the published table); TR reproduces the series, i.e. minus the printed form"},
      {8, "one-point recursions", 10, c8_one_point, ""},
      {9, "Lambda-polynomial structure", 60, c9_lambda, ""},
      {10, "Narayana identity", 1, c10_narayana, ""},
      {11, "real-rootedness and interlacing scans", 600, c11_scans, ""},
      {12, "large-genus root table", 300, c12_root_table, ""},
      {13, "character-theory self-tests", 60, c13_characters, ""},
  };

  int unexpected = 0, passed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_s;
    const bool ok = o.ok && in_time;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", secs, c.budget_s);
    std::printf("%s  %2d  %s: %s (%s)%s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), o.detail.c_str(), timing,
                in_time ? "" : " OVER BUDGET");
    const bool explained = !ok && in_time && o.only_source_conflict && !c.known_source_error.empty();
    if (explained) std::printf("          known source error: %s\n", c.known_source_error.c_str());
    if (ok) ++passed;
    if (!ok && !explained) ++unexpected;
    if (ok && !c.known_source_error.empty()) {
      ++unexpected;
      std::printf("          criterion %d was expected to fail on the published text; re-check the erratum\n", c.id);
    }
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria PASS; %d unexpected result(s)\n", passed, criteria.size(), unexpected);
  return unexpected == 0 ? 0 : 1;
}
