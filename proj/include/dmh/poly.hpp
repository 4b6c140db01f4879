#pragma once

// Dense univariate polynomials over a generic coefficient ring, ascending
// degree, no trailing zero coefficients. The zero polynomial is empty.

#include "dmh/error.hpp"
#include "dmh/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace dmh {

namespace detail {
// Free-function dispatch, usable inside classes whose member is_zero() hides it.
template <class R>
bool coeff_is_zero(const R& x) {
  return is_zero(x);
}
}  // namespace detail

template <class R>
class Poly {
 public:
  using coeff_type = R;

  Poly() = default;
  explicit Poly(int c) : Poly(R(c)) {}
  explicit Poly(R c) {
    if (!detail::coeff_is_zero(c)) c_.push_back(std::move(c));
  }
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly variable() { return monomial(R(1), 1); }
  static Poly monomial(R c, std::size_t degree) {
    if (detail::coeff_is_zero(c)) return {};
    std::vector<R> v(degree + 1, R(0));
    v[degree] = std::move(c);
    Poly p;
    p.c_ = std::move(v);
    return p;
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<R>& coeffs() const { return c_; }
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
  const R& leading() const { return c_.back(); }
  const R& operator[](std::size_t i) const { return c_[i]; }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const R& s) {
    if (is_zero_coeff(s)) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> r(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero_coeff(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(Poly a, const R& s) { return a *= s; }
  friend Poly operator*(const R& s, Poly a) { return a *= s; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Horner evaluation into any ring that R multiplies into.
  template <class S>
  S evaluate(const S& x) const {
    S acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + S(c_[i]);
    return acc;
  }
  R operator()(const R& x) const { return evaluate<R>(x); }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<R> r(c_.size() - 1, R(0));
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * R(static_cast<int>(i));
    return Poly(std::move(r));
  }

  /// p(q(x)).
  Poly compose(const Poly& q) const {
    Poly acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + Poly(c_[i]);
    return acc;
  }

  /// Coefficient-wise map into another ring.
  template <class S, class F>
  Poly<S> map(F&& f) const {
    std::vector<S> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(f(x));
    return Poly<S>(std::move(r));
  }

  /// Multiplies by x^k.
  Poly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<R> r(k, R(0));
    r.insert(r.end(), c_.begin(), c_.end());
    Poly p;
    p.c_ = std::move(r);
    return p;
  }

  /// Lowest power of x dividing the polynomial (0 for the zero polynomial).
  std::size_t valuation() const {
    std::size_t v = 0;
    while (v < c_.size() && is_zero_coeff(c_[v])) ++v;
    return v == c_.size() ? 0 : v;
  }

  Poly pow(unsigned e) const {
    Poly r(R(1));
    Poly b = *this;
    while (e) {
      if (e & 1u) r *= b;
      e >>= 1u;
      if (e) b *= b;
    }
    return r;
  }

 private:
  static bool is_zero_coeff(const R& x) { return detail::coeff_is_zero(x); }
  void trim() {
    while (!c_.empty() && is_zero_coeff(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
};

template <class R>
bool is_zero(const Poly<R>& p) {
  return p.is_zero();
}

/// Quotient and remainder; coefficients must lie in a field.
template <class R>
std::pair<Poly<R>, Poly<R>> divmod(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<R>(), a};
  std::vector<R> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<R> quo(rem.size() - db, R(0));
  const R lead_inv = R(1) / b.leading();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (is_zero(rem[i])) continue;
    R f = rem[i] * lead_inv;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * b[j];
    quo[i - db] = std::move(f);
  }
  rem.resize(db);
  return {Poly<R>(std::move(quo)), Poly<R>(std::move(rem))};
}

template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::InexactDivision, "polynomial division left a remainder");
  return q;
}

template <class R>
Poly<R> monic(const Poly<R>& p) {
  if (p.is_zero()) return p;
  return p * (R(1) / p.leading());
}

/// Monic gcd over a field; gcd(0, 0) = 0.
template <class R>
Poly<R> gcd(Poly<R> a, Poly<R> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, valid over an integral domain.
template <class R>
Poly<R> pseudo_remainder(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<R> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const R& lb = b.leading();
  for (std::size_t i = rem.size(); i-- > db;) {
    R f = rem[i];
    for (auto& x : rem) x *= lb;
    if (!is_zero(f))
      for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * b[j];
  }
  rem.resize(db);
  return Poly<R>(std::move(rem));
}

using QPoly = Poly<Rational>;

}  // namespace dmh
