#pragma once

// Topological recursion on the two genus-zero spectral curves, over the field
// Q(s) with t = s^2 so that both branch points are rational.

#include "dmh/hurwitz.hpp"
#include "dmh/ratfn.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dmh {

/// Elements of Q(s).
using SField = QRatFn;
/// Rational functions of z over Q(s).
using ZFn = RatFn<SField>;

struct SpectralCurve {
  Family family = Family::Monotone;
  ZFn x;
  ZFn y;
  ZFn involution;
  std::vector<SField> branch_points;  // 1/(1-s), 1/(1+s)
};

SpectralCurve build_curve(Family family);

/// x y^2 + (t-1) x y - y + 1 = 0 (monotone) or x y^2 - x y + (t-1) y + 1 = 0 (dessin).
bool curve_equation_holds(const SpectralCurve& curve);
/// x o sigma = x, sigma o sigma = id, branch points are the zeros of dx, and for
/// the monotone curve y + y o sigma = 1/x + 1 - t.
bool curve_invariants_hold(const SpectralCurve& curve);

/// omega_{g,n} / (dz_1 ... dz_n) as a sum of c * prod_i (z_i - a_{b_i})^{-k_i}.
/// Keys list (b_i, k_i) per variable. The unstable (0,1) and (0,2) have no terms.
struct Correlator {
  int g = 0;
  int n = 0;
  std::map<std::vector<std::pair<int, int>>, SField> terms;
};

inline constexpr int kMaxRecursionLevel = 4;  // 2g - 2 + n

/// Memoized per family; throws DepthExceeded beyond 2g - 2 + n = 4.
const Correlator& tr_correlator(const SpectralCurve& curve, int g, int n);

bool is_symmetric(const Correlator& w);
/// Every coefficient is invariant under s -> -s.
bool is_even_in_s(const Correlator& w);

/// Single-variable correlator as a rational function of z.
ZFn correlator_function(const SpectralCurve& curve, const Correlator& w);

/// "(c)/((z1-(a))^k...)+..." in z1..zn and s.
std::string to_string(const Correlator& w, const SpectralCurve& curve);

/// H_{g,n}(mu) or D_{g,n}(mu) for every sorted mu with parts <= mu_max,
/// read off the expansion at x = 0 (monotone) or 1/x = 0 (dessin).
std::map<Partition, QPoly> extract_coefficients(const SpectralCurve& curve, int g, int n, int mu_max);

struct W11Check {
  bool matches_printed = false;  // TR omega_{1,1}/dx equals the printed closed form
  bool matches_negated = false;  // ... equals minus the printed closed form
  bool ode_residual_zero = false;
  bool t1_reduction = false;  // closed form at t = 1 expands to the undeformed w_{1,1}

  bool ok() const { return (matches_printed || matches_negated) && ode_residual_zero && t1_reduction; }
};

/// Compares TR with w = -t z(z-1)(1-z+tz)^4/(tz^2-z^2+2z-1)^5 and checks
/// -x[(t-1)^2x^2-2(t+1)x+1] w' = [4(t-1)^2x^2-3(t+1)x-1] w.
W11Check verify_w11(const SpectralCurve& curve);

/// Polynomial in t from an even polynomial in s; throws OddPartIn_s.
QPoly to_t_poly(const SField& f);

}  // namespace dmh
