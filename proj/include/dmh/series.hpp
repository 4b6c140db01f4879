#pragma once

// Truncated power series c_0 + c_1 x + ... + c_n x^n + O(x^(n+1)).
// Results of binary operations carry the smaller truncation order.

#include "dmh/poly.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace dmh {

template <class R>
class TruncSeries {
 public:
  using coeff_type = R;

  explicit TruncSeries(int order = 0) : c_(static_cast<std::size_t>(std::max(order, 0)) + 1, R(0)) {}
  TruncSeries(std::vector<R> coeffs, int order) : c_(std::move(coeffs)) {
    c_.resize(static_cast<std::size_t>(std::max(order, 0)) + 1, R(0));
  }
  TruncSeries(const Poly<R>& p, int order) : TruncSeries(p.coeffs(), order) {}

  static TruncSeries variable(int order) {
    TruncSeries s(order);
    if (order >= 1) s.c_[1] = R(1);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](std::size_t i) const { return c_[i]; }
  R& operator[](std::size_t i) { return c_[i]; }
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
  const std::vector<R>& coeffs() const { return c_; }
  Poly<R> to_poly() const { return Poly<R>(c_); }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }
  friend TruncSeries operator-(TruncSeries a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    const std::size_t n = static_cast<std::size_t>(std::min(a.order(), b.order()));
    TruncSeries r(static_cast<int>(n));
    for (std::size_t i = 0; i <= n; ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  friend TruncSeries operator*(TruncSeries a, const R& s) {
    for (auto& x : a.c_) x *= s;
    return a;
  }
  friend TruncSeries operator*(const R& s, TruncSeries a) { return std::move(a) * s; }
  TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
  TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }
  friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

  /// Multiplicative inverse; the constant term must be invertible.
  TruncSeries inverse() const {
    if (is_zero(c_[0])) throw Error(ErrorCode::DivisionByZero, "series with zero constant term is not invertible");
    const std::size_t n = c_.size();
    TruncSeries r(order());
    const R inv0 = R(1) / c_[0];
    r.c_[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
      R acc(0);
      for (std::size_t j = 1; j <= k; ++j)
        if (!is_zero(c_[j])) acc += c_[j] * r.c_[k - j];
      r.c_[k] = -acc * inv0;
    }
    return r;
  }

  friend TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) { return a * b.inverse(); }

  TruncSeries derivative() const {
    TruncSeries r(std::max(order() - 1, 0));
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * R(static_cast<int>(i));
    return r;
  }

  /// this(g(x)); g must have zero constant term.
  TruncSeries compose(const TruncSeries& g) const {
    if (!is_zero(g.c_[0])) throw Error(ErrorCode::ExpansionPointPole, "inner series must vanish at 0");
    const int n = std::min(order(), g.order());
    TruncSeries acc(n);
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = acc * g;
      acc.c_[0] += c_[i];
    }
    return TruncSeries(acc.c_, n);
  }

 private:
  std::vector<R> c_;
};

/// Compositional inverse G with F(G(x)) = x + O(x^(order+1)).
template <class R>
TruncSeries<R> series_reversion(const TruncSeries<R>& f, int order) {
  if (!is_zero(f.coeff(0))) throw Error(ErrorCode::ExpansionPointPole, "series to revert has a constant term");
  const R f1 = f.coeff(1);
  if (is_zero(f1)) throw Error(ErrorCode::NonUnitLinearTerm, "linear coefficient is zero");
  const R inv = R(1) / f1;
  TruncSeries<R> F(f.coeffs(), order);
  // Newton-free fixed point: G <- G - (F(G) - x)/f1 gains one correct order per pass.
  TruncSeries<R> g = TruncSeries<R>::variable(order) * inv;
  const TruncSeries<R> x = TruncSeries<R>::variable(order);
  for (int pass = 1; pass < order; ++pass) g = g - (F.compose(g) - x) * inv;
  return g;
}

}  // namespace dmh
