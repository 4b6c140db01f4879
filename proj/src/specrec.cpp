#include "dmh/specrec.hpp"

#include "dmh/error.hpp"
#include "dmh/format.hpp"
#include "dmh/series.hpp"

#include <algorithm>
#include <climits>
#include <future>
#include <mutex>

namespace dmh {

namespace {

using Key = std::vector<std::pair<int, int>>;

const SField kS = SField::variable();
const SField kT = kS * kS;

ZFn zvar() { return ZFn::variable(); }
ZFn zconst(const SField& c) { return ZFn(c); }

SField negate_s(const SField& f) { return f.compose(-kS); }

// ---------------------------------------------------------------------------
// Elements of Q(s) whose denominators divide a power of s(1-s)(1+s). Every
// quantity met by the recursion lies in this ring, and staying in it avoids
// polynomial gcds.

// p divided by (s - r) for r in {0, 1, -1}; the caller knows p(r) = 0.
QPoly divide_root(const QPoly& p, int r) {
  const int n = p.degree();
  std::vector<Rational> q(static_cast<std::size_t>(n));
  Rational carry = 0;
  for (int i = n; i >= 1; --i) {
    carry = p.coeff(static_cast<std::size_t>(i)) + carry * r;
    q[static_cast<std::size_t>(i - 1)] = carry;
  }
  return QPoly(std::move(q));
}

Rational value_at(const QPoly& p, int r) {
  if (r == 0) return p.coeff(0);
  Rational acc = 0;
  for (int i = p.degree(); i >= 0; --i) acc = acc * r + p.coeff(static_cast<std::size_t>(i));
  return acc;
}

const QPoly& factor_power(int which, int e) {
  // which: 0 -> s, 1 -> 1 - s, 2 -> 1 + s
  static std::mutex m;
  static std::vector<QPoly> cache[3];
  std::lock_guard lock(m);
  auto& v = cache[which];
  if (v.empty()) v.push_back(QPoly(1));
  static const QPoly base[3] = {QPoly(std::vector<Rational>{0, 1}), QPoly(std::vector<Rational>{1, -1}),
                                QPoly(std::vector<Rational>{1, 1})};
  while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * base[which]);
  return v[static_cast<std::size_t>(e)];
}

class Loc {
 public:
  Loc() = default;
  Loc(int c) : p_(QPoly(Rational(c))) {}  // NOLINT
  Loc(const Rational& c) : p_(QPoly(c)) {}  // NOLINT

  static Loc from(const SField& f) {
    Loc r;
    r.p_ = f.num();
    QPoly d = f.den();
    int e[3] = {0, 0, 0};
    const int roots[3] = {0, 1, -1};
    for (int w = 0; w < 3; ++w)
      while (d.degree() > 0 && sgn(value_at(d, roots[w])) == 0) {
        d = divide_root(d, roots[w]);
        ++e[w];
      }
    if (d.degree() > 0) throw Error(ErrorCode::InexactDivision, "denominator outside s(1-s)(1+s)");
    // (s - 1)^j = (-1)^j (1 - s)^j
    Rational scale = Rational(1) / d.leading();
    if (e[1] % 2) scale = -scale;
    r.p_ *= scale;
    r.a_ = e[0];
    r.b_ = e[1];
    r.c_ = e[2];
    r.reduce();
    return r;
  }

  SField to_field() const {
    QPoly den = factor_power(0, a_) * factor_power(1, b_) * factor_power(2, c_);
    return SField(p_, den);
  }

  bool is_zero() const { return p_.is_zero(); }

  Loc inverse() const {
    if (p_.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    QPoly q = p_;
    int e[3] = {0, 0, 0};
    const int roots[3] = {0, 1, -1};
    for (int w = 0; w < 3; ++w)
      while (q.degree() > 0 && sgn(value_at(q, roots[w])) == 0) {
        q = divide_root(q, roots[w]);
        ++e[w];
      }
    if (q.degree() > 0) throw Error(ErrorCode::InexactDivision, "inverse leaves the ring of s(1-s)(1+s)");
    Loc r;
    Rational k = Rational(1) / q.leading();
    if (e[1] % 2) k = -k;  // divide_root(., 1) removed (s - 1) factors
    r.p_ = factor_power(0, a_) * factor_power(1, b_) * factor_power(2, c_) * k;
    r.a_ = e[0];
    r.b_ = e[1];
    r.c_ = e[2];
    r.reduce();
    return r;
  }

  friend Loc operator*(const Loc& x, const Loc& y) {
    if (x.is_zero() || y.is_zero()) return Loc();
    Loc r;
    r.p_ = x.p_ * y.p_;
    r.a_ = x.a_ + y.a_;
    r.b_ = x.b_ + y.b_;
    r.c_ = x.c_ + y.c_;
    r.reduce();
    return r;
  }

  friend Loc operator+(const Loc& x, const Loc& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    Loc r;
    r.a_ = std::max(x.a_, y.a_);
    r.b_ = std::max(x.b_, y.b_);
    r.c_ = std::max(x.c_, y.c_);
    r.p_ = x.lift(r) + y.lift(r);
    r.reduce();
    return r;
  }

  friend Loc operator-(const Loc& x) {
    Loc r = x;
    r.p_ *= Rational(-1);
    return r;
  }
  friend Loc operator-(const Loc& x, const Loc& y) { return x + (-y); }
  Loc& operator+=(const Loc& o) { return *this = *this + o; }
  Loc& operator-=(const Loc& o) { return *this = *this - o; }
  Loc& operator*=(const Loc& o) { return *this = *this * o; }

 private:
  QPoly lift(const Loc& to) const {
    QPoly q = p_;
    if (to.a_ > a_) q *= factor_power(0, to.a_ - a_);
    if (to.b_ > b_) q *= factor_power(1, to.b_ - b_);
    if (to.c_ > c_) q *= factor_power(2, to.c_ - c_);
    return q;
  }

  void reduce() {
    if (p_.is_zero()) {
      a_ = b_ = c_ = 0;
      return;
    }
    while (a_ > 0 && sgn(p_.coeff(0)) == 0) {
      p_ = divide_root(p_, 0);
      --a_;
    }
    while (b_ > 0 && sgn(value_at(p_, 1)) == 0) {
      p_ = divide_root(p_, 1) * Rational(-1);
      --b_;
    }
    while (c_ > 0 && sgn(value_at(p_, -1)) == 0) {
      p_ = divide_root(p_, -1);
      --c_;
    }
  }

  QPoly p_;
  int a_ = 0, b_ = 0, c_ = 0;
};

// ---------------------------------------------------------------------------
// Truncated Laurent series in e with coefficients in Q(s). Coefficients of
// e^v for val <= v < val + c.size() are stored; those up to prec are zero;
// nothing is known from prec on.

constexpr int kExact = INT_MAX / 4;

struct Laurent {
  int val = 0;
  int prec = kExact;
  std::vector<Loc> c;

  Loc at(int v) const {
    if (v >= prec) throw Error(ErrorCode::DepthExceeded, "series precision exhausted");
    if (v < val || v >= val + static_cast<int>(c.size())) return Loc();
    return c[static_cast<std::size_t>(v - val)];
  }

  void normalize() {
    std::size_t lead = 0;
    while (lead < c.size() && c[lead].is_zero()) ++lead;
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(lead));
    val += static_cast<int>(lead);
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    if (val + static_cast<int>(c.size()) > prec) c.resize(static_cast<std::size_t>(std::max(prec - val, 0)));
    if (c.empty()) val = std::min(val, prec);
  }

  bool known_zero() const { return c.empty(); }
};

Laurent monomial(const Loc& coeff, int v) {
  Laurent l;
  l.val = v;
  if (!coeff.is_zero()) l.c.push_back(coeff);
  return l;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  if (a.known_zero() && a.prec >= kExact) return b;
  if (b.known_zero() && b.prec >= kExact) return a;
  Laurent r;
  r.prec = std::min(a.prec, b.prec);
  const int lo = std::min(a.val, b.val);
  const int hi = std::min(r.prec, std::max(a.val + static_cast<int>(a.c.size()), b.val + static_cast<int>(b.c.size())));
  r.val = lo;
  for (int v = lo; v < hi; ++v) {
    Loc x;
    if (v >= a.val && v < a.val + static_cast<int>(a.c.size())) x += a.c[static_cast<std::size_t>(v - a.val)];
    if (v >= b.val && v < b.val + static_cast<int>(b.c.size())) x += b.c[static_cast<std::size_t>(v - b.val)];
    r.c.push_back(std::move(x));
  }
  r.normalize();
  return r;
}

Laurent& operator+=(Laurent& a, const Laurent& b) { return a = a + b; }

Laurent operator*(const Laurent& a, const Loc& s) {
  if (s.is_zero()) {
    Laurent z;
    z.val = a.val;
    z.prec = a.prec >= kExact ? kExact : a.prec;
    return z;
  }
  Laurent r = a;
  for (auto& x : r.c) x *= s;
  return r;
}

int sat_add(int a, int b) { return (a >= kExact || b >= kExact) ? kExact : a + b; }

Laurent multiply(const Laurent& a, const Laurent& b, int cap) {
  Laurent r;
  r.val = a.val + b.val;
  r.prec = std::min({sat_add(a.prec, b.val), sat_add(b.prec, a.val), cap});
  if (a.c.empty() || b.c.empty()) {
    r.c.clear();
    r.normalize();
    return r;
  }
  const int len = std::min<int>(static_cast<int>(a.c.size() + b.c.size()) - 1, r.prec - r.val);
  if (len <= 0) {
    r.normalize();
    return r;
  }
  r.c.assign(static_cast<std::size_t>(len), Loc());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c.size() && static_cast<int>(i + j) < len; ++j)
      if (!b.c[j].is_zero()) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.normalize();
  return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) { return multiply(a, b, kExact); }

// Coefficient of e^-1 in a * b.
Loc residue(const Laurent& a, const Laurent& b) {
  if (std::min(sat_add(a.prec, b.val), sat_add(b.prec, a.val)) <= -1)
    throw Error(ErrorCode::DepthExceeded, "series precision exhausted");
  Loc r;
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    const int j = -1 - a.val - static_cast<int>(i) - b.val;
    if (j < 0) break;
    if (j < static_cast<int>(b.c.size())) r += a.c[i] * b.c[static_cast<std::size_t>(j)];
  }
  return r;
}

/// Inverse with `terms` relative coefficients.
Laurent inverse(const Laurent& a, int terms) {
  if (a.c.empty()) throw Error(ErrorCode::DivisionByZero, "inverting a series with no known leading term");
  const int rel = std::min(terms, a.prec >= kExact ? terms : a.prec - a.val);
  Laurent r;
  r.val = -a.val;
  r.prec = r.val + rel;
  const Loc inv0 = a.c[0].inverse();
  r.c.assign(static_cast<std::size_t>(rel), Loc());
  for (int n = 0; n < rel; ++n) {
    Loc acc = n == 0 ? Loc(1) : Loc();
    for (int k = 1; k <= n && k < static_cast<int>(a.c.size()); ++k)
      acc -= a.c[static_cast<std::size_t>(k)] * r.c[static_cast<std::size_t>(n - k)];
    r.c[static_cast<std::size_t>(n)] = acc * inv0;
  }
  r.normalize();
  return r;
}

Laurent power(const Laurent& a, int k) {
  Laurent r = monomial(Loc(1), 0);
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

Laurent derivative(const Laurent& a) {
  Laurent r;
  r.val = a.val - 1;
  r.prec = a.prec >= kExact ? kExact : a.prec - 1;
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c.push_back(a.c[i] * Loc(a.val + static_cast<int>(i)));
  r.normalize();
  return r;
}

Laurent truncate(Laurent a, int prec) {
  a.prec = std::min(a.prec, prec);
  a.normalize();
  return a;
}

// p(alpha + e) as an exact polynomial in e.
Laurent taylor_shift(const Poly<SField>& p, const Loc& alpha) {
  std::vector<Loc> c;
  for (const auto& x : p.coeffs()) c.push_back(Loc::from(x));
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) c[j - 1] += alpha * c[j];
  Laurent l;
  l.c = std::move(c);
  l.normalize();
  return l;
}

Laurent expand_at(const ZFn& f, const Loc& alpha, int terms) {
  return taylor_shift(f.num(), alpha) * inverse(taylor_shift(f.den(), alpha), terms);
}

// ---------------------------------------------------------------------------

struct Branch {
  int index = 0;
  Loc alpha;
  int terms = 0;
  Laurent sig;   // sigma(alpha + e) - alpha
  Laurent dsig;  // sigma'(alpha + e)
  Laurent e_minus_sig_inv2;  // 1/(e - sig)^2
  Laurent kernel_base;  // 1/(2 (y - y o sigma) x')
  std::vector<Laurent> kernel;  // kernel[k] multiplies (z1 - alpha)^{-(k+1)}
  std::map<std::pair<int, int>, Laurent> zcache, scache;
  std::vector<Loc> points;

  Branch(const SpectralCurve& curve, int a, int terms_) : index(a), alpha(Loc::from(curve.branch_points[static_cast<std::size_t>(a)])), terms(terms_) {
    for (const auto& b : curve.branch_points) points.push_back(Loc::from(b));
    sig = expand_at(curve.involution, alpha, terms + 2) + monomial(-alpha, 0);
    dsig = derivative(sig);
    e_minus_sig_inv2 = power(inverse(monomial(Loc(1), 1) + sig * Loc(-1), terms), 2);
    const ZFn ysig = curve.y.compose(curve.involution);
    const ZFn denom = (curve.y - ysig) * curve.x.derivative() * zconst(SField(2));
    kernel_base = inverse(expand_at(denom, alpha, terms + 4), terms);
  }

  const Laurent& kernel_term(std::size_t k) {
    while (kernel.size() <= k) {
      const int kk = static_cast<int>(kernel.size());
      kernel.push_back((power(monomial(Loc(1), 1), kk) + power(sig, kk) * Loc(-1)) * kernel_base);
    }
    return kernel[k];
  }

  // (z - a_j)^{-k} at z = alpha + e.
  const Laurent& zpole(int j, int k) {
    auto it = zcache.find({j, k});
    if (it != zcache.end()) return it->second;
    Laurent r;
    if (j == index) {
      r = monomial(Loc(1), -k);
    } else {
      const Loc d = alpha - points[static_cast<std::size_t>(j)];
      r = power(inverse(monomial(d, 0) + monomial(Loc(1), 1), terms), k);
    }
    return zcache.emplace(std::make_pair(j, k), std::move(r)).first->second;
  }

  // (sigma(z) - a_j)^{-k} sigma'(z) at z = alpha + e.
  const Laurent& spole(int j, int k) {
    auto it = scache.find({j, k});
    if (it != scache.end()) return it->second;
    Laurent base = j == index ? sig : sig + monomial(alpha - points[static_cast<std::size_t>(j)], 0);
    Laurent r = power(inverse(base, terms), k) * dsig;
    return scache.emplace(std::make_pair(j, k), std::move(r)).first->second;
  }
};

using SlotMap = std::map<Key, Laurent>;

// First slot substituted; remaining slots keep their pole keys.
template <class Pole>
SlotMap collapse(const Correlator& w, Pole&& pole) {
  SlotMap out;
  for (const auto& [key, c] : w.terms) {
    Key rest(key.begin() + 1, key.end());
    auto& slot = out[rest];
    slot += pole(key[0].first, key[0].second) * Loc::from(c);
  }
  return out;
}

Key merge(const Key& left, const Key& right, unsigned mask, int slots) {
  Key out;
  std::size_t li = 0, ri = 0;
  for (int i = 0; i < slots; ++i) out.push_back((mask >> i) & 1u ? left[li++] : right[ri++]);
  return out;
}

class Engine {
 public:
  explicit Engine(SpectralCurve curve) : curve_(std::move(curve)) {}

  const Correlator& get(int g, int n) {
    if (g < 0 || n < 1) throw Error(ErrorCode::NegativeWeight, "need g >= 0 and n >= 1");
    if (2 * g - 2 + n > kMaxRecursionLevel) throw Error(ErrorCode::DepthExceeded, "2g-2+n is limited to 4");
    {
      std::lock_guard lock(mutex_);
      auto it = memo_.find({g, n});
      if (it != memo_.end()) return it->second;
    }
    Correlator w;
    w.g = g;
    w.n = n;
    if (2 * g - 2 + n > 0) {
      // Make sure lower levels exist before fanning out.
      for (int g1 = 0; g1 <= g; ++g1)
        for (int n1 = 1; n1 <= n + 1; ++n1)
          if (2 * g1 - 2 + n1 > 0 && 2 * g1 - 2 + n1 < 2 * g - 2 + n) get(g1, n1);
      for (int terms = 8 + 4 * (2 * g - 2 + n);; terms += 6) {
        try {
          for (auto& [k, v] : compute(g, n, terms)) w.terms.emplace(k, v.to_field());
          break;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::DepthExceeded || terms > 80) throw;
        }
      }
    }
    std::lock_guard lock(mutex_);
    return memo_.emplace(std::make_pair(g, n), std::move(w)).first->second;
  }

  const SpectralCurve& curve() const { return curve_; }

 private:
  const Correlator& lower(int g, int n) {
    std::lock_guard lock(mutex_);
    return memo_.at({g, n});
  }

  std::map<Key, Loc> compute(int g, int n, int terms) {
    std::vector<std::future<std::map<Key, Loc>>> parts;
    for (int a = 0; a < 2; ++a)
      parts.push_back(std::async(std::launch::async, [this, g, n, terms, a] { return at_branch(g, n, terms, a); }));
    std::map<Key, Loc> out;
    for (auto& f : parts)
      for (auto& [k, v] : f.get()) {
        Loc& slot = out[k];
        slot += v;
        if (slot.is_zero()) out.erase(k);
      }
    return out;
  }

  std::map<Key, Loc> at_branch(int g, int n, int terms, int a) {
    Branch br(curve_, a, terms);
    const int rest = n - 1;
    SlotMap w;
    // Only coefficients below e^1 reach a residue: every kernel term has valuation >= -1.
    auto add = [&w](const Key& k, const Laurent& l) {
      auto& slot = w[k];
      slot += truncate(l, 1);
    };

    if (g >= 1) {
      if (g == 1 && n == 1) {
        add(Key{}, br.e_minus_sig_inv2 * br.dsig);
      } else {
        const Correlator& low = lower(g - 1, n + 1);
        std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, Laurent> pair_cache;
        for (const auto& [key, c] : low.terms) {
          auto pk = std::make_pair(key[0], key[1]);
          auto it = pair_cache.find(pk);
          if (it == pair_cache.end())
            it = pair_cache.emplace(pk, br.zpole(key[0].first, key[0].second) * br.spole(key[1].first, key[1].second)).first;
          add(Key(key.begin() + 2, key.end()), it->second * Loc::from(c));  // truncated by add
        }
      }
    }

    // omega_{0,2}(z, z_i) and omega_{0,2}(sigma z, z_i) sigma' in the pole basis of z_i.
    auto unstable_left = [&]() {
      SlotMap m;
      for (int k = 0; k < terms; ++k) m[Key{{a, k + 2}}] = monomial(Loc(k + 1), k);
      return m;
    };
    auto unstable_right = [&]() {
      SlotMap m;
      Laurent p = monomial(Loc(1), 0);
      for (int k = 0; k < terms; ++k) {
        m[Key{{a, k + 2}}] = truncate(p * br.dsig * Loc(k + 1), terms);
        p = p * br.sig;
      }
      return m;
    };
    std::map<std::pair<int, int>, SlotMap> left_cache, right_cache;
    auto left = [&](int g1, int n1) -> const SlotMap& {
      auto it = left_cache.find({g1, n1});
      if (it != left_cache.end()) return it->second;
      SlotMap m = (g1 == 0 && n1 == 2) ? unstable_left()
                                       : collapse(lower(g1, n1), [&](int j, int k) { return br.zpole(j, k); });
      return left_cache.emplace(std::make_pair(g1, n1), std::move(m)).first->second;
    };
    auto right = [&](int g1, int n1) -> const SlotMap& {
      auto it = right_cache.find({g1, n1});
      if (it != right_cache.end()) return it->second;
      SlotMap m = (g1 == 0 && n1 == 2) ? unstable_right()
                                       : collapse(lower(g1, n1), [&](int j, int k) { return br.spole(j, k); });
      return right_cache.emplace(std::make_pair(g1, n1), std::move(m)).first->second;
    };

    for (int g1 = 0; g1 <= g; ++g1) {
      const int g2 = g - g1;
      for (unsigned mask = 0; mask < (1u << rest); ++mask) {
        const int ni = __builtin_popcount(mask), nj = rest - ni;
        if ((g1 == 0 && ni == 0) || (g2 == 0 && nj == 0)) continue;
        const SlotMap& lm = left(g1, ni + 1);
        const SlotMap& rm = right(g2, nj + 1);
        for (const auto& [kl, sl] : lm)
          for (const auto& [kr, sr] : rm) {
            const Laurent prod = multiply(sl, sr, 1);
            if (prod.known_zero() && prod.prec > 0) continue;
            add(merge(kl, kr, mask, rest), prod);
          }
      }
    }

    std::map<Key, Loc> out;
    for (const auto& [key, ser] : w) {
      if (ser.known_zero() && ser.prec > 0) continue;
      for (std::size_t k = 1;; ++k) {
        const Laurent& kt = br.kernel_term(k);
        if (!kt.c.empty() && kt.val + ser.val > -1) break;
        if (kt.c.empty() && kt.val + ser.val > -1) break;
        const Loc r = residue(kt, ser);
        if (r.is_zero()) continue;
        Key full{{a, static_cast<int>(k) + 1}};
        full.insert(full.end(), key.begin(), key.end());
        out[full] += r;
      }
    }
    return out;
  }

  SpectralCurve curve_;
  std::mutex mutex_;
  std::map<std::pair<int, int>, Correlator> memo_;
};

Engine& engine(Family family) {
  static Engine monotone(build_curve(Family::Monotone));
  static Engine dessin(build_curve(Family::Dessin));
  return family == Family::Monotone ? monotone : dessin;
}

// The coordinate in which both curves are expanded: x (monotone) or 1/x (dessin).
ZFn expansion_coordinate() {
  const ZFn z = zvar();
  return z * (ZFn(1) - z) / (ZFn(1) - z + zconst(kT) * z);
}

TruncSeries<SField> series_of(const ZFn& f, int order) {
  // f must be regular at z = 0.
  TruncSeries<SField> n(f.num().coeffs(), order), d(f.den().coeffs(), order);
  return n / d;
}

// z as a series in the expansion coordinate.
TruncSeries<SField> z_of_xi(int order) { return series_reversion(series_of(expansion_coordinate(), order), order); }

}  // namespace

SpectralCurve build_curve(Family family) {
  SpectralCurve c;
  c.family = family;
  const ZFn z = zvar(), one(1), t = zconst(kT);
  const ZFn w = one - z + t * z;  // 1 - z + tz
  if (family == Family::Monotone) {
    c.x = z * (one - z) / w;
    c.y = w / (one - z);
  } else {
    c.x = w / (z * (one - z));
    c.y = z;
  }
  c.involution = (one - z) / w;
  c.branch_points = {SField(1) / (SField(1) - kS), SField(1) / (SField(1) + kS)};
  return c;
}

bool curve_equation_holds(const SpectralCurve& c) {
  const ZFn t = zconst(kT), one(1);
  const ZFn& x = c.x;
  const ZFn& y = c.y;
  if (c.family == Family::Monotone) return (x * y * y + (t - one) * x * y - y + one).is_zero();
  return (x * y * y - x * y + (t - one) * y + one).is_zero();
}

bool curve_invariants_hold(const SpectralCurve& c) {
  const ZFn z = zvar(), one(1), t = zconst(kT);
  if (c.x.compose(c.involution) != c.x) return false;
  if (c.involution.compose(c.involution) != z) return false;
  const ZFn dx = c.x.derivative();
  if (dx.num().degree() != 2) return false;
  for (const auto& b : c.branch_points)
    if (!dx.num().evaluate(b).is_zero()) return false;
  const ZFn trace = c.y + c.y.compose(c.involution);
  if (c.family == Family::Monotone) return trace == one / c.x + one - t;
  return trace == one - (t - one) / c.x;
}

const Correlator& tr_correlator(const SpectralCurve& curve, int g, int n) { return engine(curve.family).get(g, n); }

bool is_symmetric(const Correlator& w) {
  for (const auto& [key, c] : w.terms) {
    for (std::size_t i = 0; i + 1 < key.size(); ++i) {
      Key k = key;
      std::swap(k[i], k[i + 1]);
      auto it = w.terms.find(k);
      if (it == w.terms.end() || it->second != c) return false;
    }
  }
  return true;
}

bool is_even_in_s(const Correlator& w) {
  // s -> -s swaps the two branch points.
  for (const auto& [key, c] : w.terms) {
    Key k = key;
    for (auto& p : k) p.first = 1 - p.first;
    auto it = w.terms.find(k);
    if (it == w.terms.end() || it->second != negate_s(c)) return false;
  }
  return true;
}

ZFn correlator_function(const SpectralCurve& curve, const Correlator& w) {
  if (w.n != 1) throw Error(ErrorCode::LengthMismatch, "correlator_function needs n = 1");
  ZFn out;
  const ZFn z = zvar();
  for (const auto& [key, c] : w.terms) {
    const ZFn base = z - zconst(curve.branch_points[static_cast<std::size_t>(key[0].first)]);
    ZFn p(1);
    for (int i = 0; i < key[0].second; ++i) p *= base;
    out += zconst(c) / p;
  }
  return out;
}

std::string to_string(const Correlator& w, const SpectralCurve& curve) {
  if (w.terms.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : w.terms) {
    if (!out.empty()) out += "+";
    out += "(" + to_string(c, 's') + ")/(";
    for (std::size_t i = 0; i < key.size(); ++i) {
      out += "(z" + std::to_string(i + 1) + "-(" + to_string(curve.branch_points[static_cast<std::size_t>(key[i].first)], 's') + "))";
      if (key[i].second != 1) out += "^" + std::to_string(key[i].second);
    }
    out += ")";
  }
  return out;
}

QPoly to_t_poly(const SField& f) {
  if (negate_s(f) != f) throw Error(ErrorCode::OddPartInS, "value is not even in s");
  if (!f.is_polynomial()) throw Error(ErrorCode::InexactDivision, "value is not a polynomial in t");
  std::vector<Rational> c;
  const auto& p = f.num();
  for (int i = 0; i <= p.degree(); i += 2) c.push_back(p.coeff(static_cast<std::size_t>(i)));
  return QPoly(std::move(c)) * (Rational(1) / f.den().leading());
}

std::map<Partition, QPoly> extract_coefficients(const SpectralCurve& curve, int g, int n, int mu_max) {
  if (mu_max < 1) return {};
  const int order = mu_max + 1;
  const auto zx = z_of_xi(order);
  std::map<Partition, QPoly> out;
  std::vector<std::vector<int>> tuples{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& tup : tuples)
      for (int m = tup.empty() ? mu_max : tup.back(); m >= 1; --m) {
        auto u = tup;
        u.push_back(m);
        next.push_back(std::move(u));
      }
    tuples = std::move(next);
  }

  if (g == 0 && n == 1) {
    TruncSeries<SField> f;
    if (curve.family == Family::Monotone) {
      // y dx: y(z(x)) = sum mu H(mu) x^(mu-1)
      f = series_of(curve.y, order).compose(zx);
    } else {
      // y dx with x = 1/u is -z(u)/u^2 du; the residue term -du/u is dropped
      // and the sign follows y -> -y.
      std::vector<SField> c(static_cast<std::size_t>(order) + 1);
      for (int i = 0; i + 2 <= order; ++i) c[static_cast<std::size_t>(i)] = zx.coeff(static_cast<std::size_t>(i + 2));
      f = TruncSeries<SField>(c, order);
    }
    for (const auto& tup : tuples)
      out[Partition(tup)] = to_t_poly(f.coeff(static_cast<std::size_t>(tup[0] - 1)) / SField(tup[0]));
    return out;
  }

  if (g == 0 && n == 2) {
    // [z'(u1) z'(u2) / Q^2 - 1] / (u1 - u2)^2 with Q = (z(u1) - z(u2))/(u1 - u2).
    const int deg = 2 * mu_max;
    using Bi = std::vector<std::vector<SField>>;  // [a][b], a + b <= deg
    auto make = [&] { return Bi(static_cast<std::size_t>(deg) + 1, std::vector<SField>(static_cast<std::size_t>(deg) + 1)); };
    auto mul = [&](const Bi& p, const Bi& q) {
      Bi r = make();
      for (int a = 0; a <= deg; ++a)
        for (int b = 0; a + b <= deg; ++b) {
          const SField& pv = p[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
          if (pv.is_zero()) continue;
          for (int c = 0; a + c <= deg; ++c)
            for (int d = 0; a + b + c + d <= deg; ++d) {
              const SField& qv = q[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)];
              if (!qv.is_zero()) r[static_cast<std::size_t>(a + c)][static_cast<std::size_t>(b + d)] += pv * qv;
            }
        }
      return r;
    };
    const auto zs = z_of_xi(deg + 2);
    Bi q = make();
    for (int k = 1; k <= deg + 1; ++k)
      for (int a = 0; a <= k - 1; ++a)
        if (k - 1 <= deg) q[static_cast<std::size_t>(a)][static_cast<std::size_t>(k - 1 - a)] += zs.coeff(static_cast<std::size_t>(k));
    // 1/q by Newton-free recurrence on total degree: q(0,0) = 1.
    Bi inv = make();
    inv[0][0] = SField(1) / q[0][0];
    for (int total = 1; total <= deg; ++total)
      for (int a = 0; a <= total; ++a) {
        const int b = total - a;
        SField acc;
        for (int c = 0; c <= a; ++c)
          for (int d = 0; d <= b; ++d) {
            if (c == 0 && d == 0) continue;
            acc -= q[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)] * inv[static_cast<std::size_t>(a - c)][static_cast<std::size_t>(b - d)];
          }
        inv[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = acc * inv[0][0];
      }
    Bi dz = make();
    const auto zp = zs.derivative();
    for (int a = 0; a <= deg; ++a)
      for (int b = 0; a + b <= deg; ++b)
        dz[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = zp.coeff(static_cast<std::size_t>(a)) * zp.coeff(static_cast<std::size_t>(b));
    Bi f = mul(mul(dz, inv), inv);
    f[0][0] -= SField(1);
    // Divide each homogeneous part by (u1 - u2) twice.
    for (int pass = 0; pass < 2; ++pass) {
      Bi r = make();
      for (int total = 1; total <= deg; ++total) {
        SField qprev;
        for (int a = 0; a < total; ++a) {
          // p_a = q_{a-1} - q_a
          const SField qa = qprev - f[static_cast<std::size_t>(a)][static_cast<std::size_t>(total - a)];
          r[static_cast<std::size_t>(a)][static_cast<std::size_t>(total - 1 - a)] = qa;
          qprev = qa;
        }
        if (qprev != f[static_cast<std::size_t>(total)][0]) {
          if (total <= deg - 2 * pass) throw Error(ErrorCode::InexactDivision, "(0,2) correction is not divisible");
        }
      }
      if (!f[0][0].is_zero()) throw Error(ErrorCode::InexactDivision, "(0,2) correction has a constant term");
      f = std::move(r);
    }
    for (const auto& tup : tuples) {
      const SField v = f[static_cast<std::size_t>(tup[0] - 1)][static_cast<std::size_t>(tup[1] - 1)];
      out[Partition(tup)] = to_t_poly(v / SField(tup[0] * tup[1]));
    }
    return out;
  }

  const Correlator& w = tr_correlator(curve, g, n);
  // Each pole function (z - a)^{-k} dz as a series in the expansion coordinate.
  const auto dzx = zx.derivative();
  std::map<std::pair<int, int>, std::vector<Loc>> basis;
  for (const auto& [key, c] : w.terms)
    for (const auto& p : key) {
      if (basis.count(p)) continue;
      const SField& a = curve.branch_points[static_cast<std::size_t>(p.first)];
      const int k = p.second;
      // (z - a)^{-k} = (-a)^{-k} (1 - z/a)^{-k}
      std::vector<SField> c(static_cast<std::size_t>(order) + 1);
      SField ainv = SField(1) / a, scale = SField(1);
      for (int i = 0; i < k; ++i) scale *= -ainv;
      SField apow(1);
      for (int m = 0; m <= order; ++m) {
        c[static_cast<std::size_t>(m)] = scale * apow * SField(Rational(binomial(static_cast<unsigned>(k + m - 1), static_cast<unsigned>(m))));
        apow *= ainv;
      }
      const auto phi = (TruncSeries<SField>(c, order).compose(zx)) * dzx;
      std::vector<Loc> v(static_cast<std::size_t>(mu_max));
      for (int m = 0; m < mu_max; ++m) v[static_cast<std::size_t>(m)] = Loc::from(phi.coeff(static_cast<std::size_t>(m)));
      basis.emplace(p, std::move(v));
    }
  std::vector<std::pair<const Key*, Loc>> coeffs;
  for (const auto& [key, c] : w.terms) coeffs.emplace_back(&key, Loc::from(c));
  for (const auto& tup : tuples) {
    Loc total;
    for (const auto& [kp, c] : coeffs) {
      const Key& key = *kp;
      Loc prod = c;
      for (std::size_t i = 0; i < key.size() && !prod.is_zero(); ++i)
        prod *= basis.at(key[i])[static_cast<std::size_t>(tup[i] - 1)];
      total += prod;
    }
    Rational mu_prod = 1;
    for (int m : tup) mu_prod *= m;
    // The dessin expansion reads y dx with y -> -y, which scales omega_{g,n} by (-1)^n.
    if (curve.family == Family::Dessin && n % 2 == 1) mu_prod = -mu_prod;
    out[Partition(tup)] = to_t_poly(total.to_field() / SField(mu_prod));
  }
  return out;
}

namespace {

// Unreduced fractions in Q[s][z] (outer variable z). Identities are tested by
// cross-multiplying, so no gcd is ever taken.
using SZPoly = Poly<QPoly>;

struct Frac {
  SZPoly num;
  SZPoly den{QPoly(1)};

  friend Frac operator+(const Frac& a, const Frac& b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend Frac operator-(const Frac& a) { return {a.num * QPoly(-1), a.den}; }
  friend Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }
  friend Frac operator*(const Frac& a, const Frac& b) { return {a.num * b.num, a.den * b.den}; }
  friend Frac operator/(const Frac& a, const Frac& b) { return {a.num * b.den, a.den * b.num}; }
  Frac derivative() const { return {num.derivative() * den - num * den.derivative(), den * den}; }
  bool is_zero() const { return num.is_zero(); }
  friend bool operator==(const Frac& a, const Frac& b) { return (a.num * b.den - b.num * a.den).is_zero(); }
};

Frac frac_const(const SField& c) { return {SZPoly(c.num()), SZPoly(c.den())}; }
Frac frac_z() { return {SZPoly(std::vector<QPoly>{QPoly(), QPoly(1)}), SZPoly(QPoly(1))}; }

Frac to_frac(const Poly<SField>& p) {
  Frac out{SZPoly(), SZPoly(QPoly(1))};
  Frac zp = frac_const(SField(1));
  for (int i = 0; i <= p.degree(); ++i) {
    out = out + frac_const(p.coeff(static_cast<std::size_t>(i))) * zp;
    zp = zp * frac_z();
  }
  return out;
}

Frac to_frac(const ZFn& f) { return to_frac(f.num()) / to_frac(f.den()); }

}  // namespace

W11Check verify_w11(const SpectralCurve& curve) {
  W11Check r;
  const Frac z = frac_z(), one = frac_const(SField(1)), t = frac_const(kT);
  const Frac x = to_frac(curve.x);
  const Frac dx = x.derivative();
  Frac sum{SZPoly(), SZPoly(QPoly(1))};
  for (const auto& [key, c] : tr_correlator(curve, 1, 1).terms) {
    const Frac base = z - frac_const(curve.branch_points[static_cast<std::size_t>(key[0].first)]);
    Frac p = one;
    for (int i = 0; i < key[0].second; ++i) p = p * base;
    sum = sum + frac_const(c) / p;
  }
  const Frac w_tr = sum / dx;
  const Frac b = one - z + t * z;
  const Frac b2 = b * b;
  const Frac d = t * z * z - z * z + frac_const(SField(2)) * z - one;
  const Frac d5 = d * d * d * d * d;
  const Frac closed = -(t * z * (z - one) * b2 * b2) / d5;
  r.matches_printed = w_tr == closed;
  r.matches_negated = w_tr == -closed;
  // dw/dx = w'(z)/x'(z)
  const Frac tm1 = t - one, tp1 = t + one;
  const Frac lhs = -x * (tm1 * tm1 * x * x - frac_const(SField(2)) * tp1 * x + one) * closed.derivative() / dx;
  const Frac rhs = (frac_const(SField(4)) * tm1 * tm1 * x * x - frac_const(SField(3)) * tp1 * x - one) * closed;
  r.ode_residual_zero = lhs == rhs;
  // At t = 1: w = -z(z-1)/(2z-1)^5 with x = z(1-z).
  const int order = 9;
  using QS = TruncSeries<Rational>;
  const QS zq = series_reversion(QS(std::vector<Rational>{0, 1, -1}, order), order);
  const QS num = QS(std::vector<Rational>{0, 1, -1}, order).compose(zq);  // -z(z-1)
  const QS den = QS(std::vector<Rational>{-1, 2}, order).compose(zq);
  const QS w1 = num / (den * den * den * den * den);
  const Rational sign = r.matches_negated ? Rational(-1) : Rational(1);
  r.t1_reduction = true;
  for (int dd = 1; dd <= order; ++dd) {
    const Rational h = monotone_H(1, Partition{dd}).evaluate(Rational(1)) * dd;
    if (w1.coeff(static_cast<std::size_t>(dd - 1)) * sign != h) r.t1_reduction = false;
  }
  return r;
}

}  // namespace dmh
