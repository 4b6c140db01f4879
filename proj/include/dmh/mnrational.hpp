#pragma once

// Reduced fractions of polynomials in M and N over Q.
//
// A bivariate polynomial is stored recursively as a polynomial in M whose
// coefficients are polynomials in N. Fractions are reduced by a primitive
// pseudo-remainder gcd over Q[N][M] and scaled so the denominator's
// graded-lex leading coefficient is 1.

#include "dmh/poly.hpp"
#include "dmh/ratfn.hpp"
#include "dmh/series.hpp"

#include <string>

namespace dmh {

using BiPoly = Poly<QPoly>;  // outer variable M, inner variable N

QPoly bipoly_content(const BiPoly& p);
BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b);
BiPoly bipoly_exact_div(const BiPoly& a, const BiPoly& b);
/// Coefficient of M^i N^j.
Rational bipoly_coeff(const BiPoly& p, int i, int j);
/// Canonical expanded form, lex order with M before N, e.g. "M^2N-3MN+4".
std::string to_string(const BiPoly& p);

class MNRational {
 public:
  MNRational() : num_(), den_(QPoly(1)) {}
  MNRational(int c) : MNRational(Rational(c)) {}  // NOLINT
  MNRational(const Rational& c);                   // NOLINT
  MNRational(BiPoly num);                          // NOLINT
  MNRational(BiPoly num, BiPoly den);

  static MNRational M();
  static MNRational N();

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// True when the denominator does not involve M.
  bool den_is_m_free() const { return den_.degree() == 0; }

  friend MNRational operator+(const MNRational& a, const MNRational& b);
  friend MNRational operator-(const MNRational& a, const MNRational& b);
  friend MNRational operator-(const MNRational& a);
  friend MNRational operator*(const MNRational& a, const MNRational& b);
  friend MNRational operator/(const MNRational& a, const MNRational& b);
  MNRational& operator+=(const MNRational& o) { return *this = *this + o; }
  MNRational& operator-=(const MNRational& o) { return *this = *this - o; }
  MNRational& operator*=(const MNRational& o) { return *this = *this * o; }
  MNRational& operator/=(const MNRational& o) { return *this = *this / o; }
  friend bool operator==(const MNRational& a, const MNRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const MNRational& a, const MNRational& b) { return !(a == b); }

  Rational evaluate(const Rational& m, const Rational& n) const;

  /// Expanded canonical string.
  std::string to_string() const;
  /// Best-effort display in the factored style of the published tables;
  /// parses back to the same value.
  std::string to_factored_string() const;

 private:
  struct Reduced {};
  MNRational(BiPoly num, BiPoly den, Reduced);
  void reduce();
  void fix_scale();

  BiPoly num_;
  BiPoly den_;
};

inline bool is_zero(const MNRational& r) { return r.is_zero(); }

MNRational parse_mnrational(const std::string& text);

/// Coefficients c_r with R(N/(1-t), N) = sum_r c_r N^(-r) + O(N^(-order-1)).
TruncSeries<QRatFn> largeN_expand(const MNRational& r, int order);

}  // namespace dmh
