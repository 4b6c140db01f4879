#pragma once

// Univariate rational functions over a field: num/den with gcd(num, den) = 1
// and a monic denominator, so equality is structural.

#include "dmh/poly.hpp"

#include <algorithm>

namespace dmh {

template <class R>
class RatFn {
 public:
  using coeff_type = R;

  RatFn() : num_(), den_(R(1)) {}
  RatFn(int c) : num_(R(c)), den_(R(1)) {}  // NOLINT: literal constants
  RatFn(const R& c) : num_(c), den_(R(1)) {}  // NOLINT
  RatFn(Poly<R> p) : num_(std::move(p)), den_(R(1)) {}  // NOLINT
  RatFn(Poly<R> num, Poly<R> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RatFn variable() { return RatFn(Poly<R>::variable()); }

  const Poly<R>& num() const { return num_; }
  const Poly<R>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
  RatFn& operator/=(const RatFn& o) { return *this = *this / o; }

  friend RatFn operator+(const RatFn& a, const RatFn& b) {
    if (a.den_ == b.den_) return RatFn(a.num_ + b.num_, a.den_);
    if (b.den_.degree() == 0) return RatFn(a.num_ + b.num_ * a.den_, a.den_, Normalized{});
    if (a.den_.degree() == 0) return RatFn(a.num_ * b.den_ + b.num_, b.den_, Normalized{});
    return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFn operator-(const RatFn& a) { return RatFn(-a.num_, a.den_, Normalized{}); }
  friend RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }
  friend RatFn operator*(const RatFn& a, const RatFn& b) {
    if (a.is_zero() || b.is_zero()) return RatFn();
    if (a.den_.degree() == 0 && b.den_.degree() == 0) return RatFn(a.num_ * b.num_, a.den_, Normalized{});
    // Cross-cancel before multiplying to keep sizes small.
    Poly<R> g1 = gcd(a.num_, b.den_);
    Poly<R> g2 = gcd(b.num_, a.den_);
    Poly<R> n = exact_div(a.num_, g1) * exact_div(b.num_, g2);
    Poly<R> d = exact_div(a.den_, g2) * exact_div(b.den_, g1);
    return RatFn(std::move(n), std::move(d), MonicFix{});
  }
  friend RatFn operator/(const RatFn& a, const RatFn& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function division by zero");
    return a * RatFn(b.den_, b.num_, MonicFix{});
  }

  friend bool operator==(const RatFn& a, const RatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

  template <class S>
  S evaluate(const S& x) const {
    S d = den_.template evaluate<S>(x);
    if (detail::coeff_is_zero(d)) throw Error(ErrorCode::DivisionByZero, "rational function evaluated at a pole");
    return num_.template evaluate<S>(x) / d;
  }

  RatFn derivative() const {
    return RatFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  /// f(g(x)) for a rational function g.
  RatFn compose(const RatFn& g) const {
    // Homogenize: f = N/D with deg max = m; f(g) = sum n_i g_num^i g_den^(m-i) / (same for D).
    const int m = std::max(num_.degree(), den_.degree());
    auto homog = [&](const Poly<R>& p) {
      Poly<R> acc;
      for (int i = 0; i <= p.degree(); ++i) {
        if (detail::coeff_is_zero(p[static_cast<std::size_t>(i)])) continue;
        acc += p[static_cast<std::size_t>(i)] * (g.num_.pow(static_cast<unsigned>(i)) *
                                                   g.den_.pow(static_cast<unsigned>(m - i)));
      }
      return acc;
    };
    return RatFn(homog(num_), homog(den_));
  }

 private:
  struct Normalized {};
  struct MonicFix {};
  RatFn(Poly<R> num, Poly<R> den, Normalized) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero()) den_ = Poly<R>(R(1));
  }
  RatFn(Poly<R> num, Poly<R> den, MonicFix) : num_(std::move(num)), den_(std::move(den)) { make_monic(); }

  void make_monic() {
    if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    if (num_.is_zero()) {
      den_ = Poly<R>(R(1));
      return;
    }
    const R& lc = den_.leading();
    if (!(lc == R(1))) {
      R inv = R(1) / lc;
      num_ *= inv;
      den_ *= inv;
    }
  }
  void normalize() {
    if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    if (num_.is_zero()) {
      den_ = Poly<R>(R(1));
      return;
    }
    if (den_.degree() > 0) {
      Poly<R> g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
      }
    }
    make_monic();
  }

  Poly<R> num_;
  Poly<R> den_;
};

template <class R>
bool is_zero(const RatFn<R>& f) {
  return f.is_zero();
}

using QRatFn = RatFn<Rational>;

}  // namespace dmh
