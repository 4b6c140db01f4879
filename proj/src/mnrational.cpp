#include "dmh/mnrational.hpp"

#include "dmh/format.hpp"
#include "dmh/parse.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace dmh {

namespace {

BiPoly scale(const BiPoly& p, const Rational& s) {
  std::vector<QPoly> c;
  c.reserve(p.size());
  for (const auto& x : p.coeffs()) c.push_back(x * s);
  return BiPoly(std::move(c));
}

BiPoly div_content(const BiPoly& p, const QPoly& c) {
  if (c.degree() == 0 && is_one(c[0])) return p;
  std::vector<QPoly> out;
  out.reserve(p.size());
  for (const auto& x : p.coeffs()) out.push_back(exact_div(x, c));
  return BiPoly(std::move(out));
}

BiPoly primitive_part(const BiPoly& p) { return div_content(p, bipoly_content(p)); }

std::optional<BiPoly> try_divide(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "bivariate division by zero");
  if (a.is_zero()) return BiPoly();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<QPoly> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<QPoly> quo(rem.size() - db);
  const QPoly& lb = b.leading();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i].is_zero()) continue;
    auto [q, r] = divmod(rem[i], lb);
    if (!r.is_zero()) return std::nullopt;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * b[j];
    quo[i - db] = std::move(q);
  }
  for (std::size_t i = 0; i < db; ++i)
    if (!rem[i].is_zero()) return std::nullopt;
  return BiPoly(std::move(quo));
}

// Graded-lex leading coefficient: highest total degree, then highest M power.
Rational graded_lex_leading(const BiPoly& p) {
  int best_total = -1;
  int best_i = -1;
  Rational lc;
  for (int i = 0; i <= p.degree(); ++i) {
    const QPoly& c = p[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const int total = i + c.degree();
    if (total > best_total || (total == best_total && i > best_i)) {
      best_total = total;
      best_i = i;
      lc = c.leading();
    }
  }
  return lc;
}

Integer coeff_lcm_den(const BiPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs())
    for (const auto& q : c.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

Integer coeff_content(const BiPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs())
    for (const auto& q : c.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
  return g;
}

// Lex-leading coefficient: highest M power, then highest N power.
Rational lex_leading(const BiPoly& p) { return p.leading().leading(); }

std::string integer_bipoly_string(const BiPoly& p) {
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const QPoly& c = p[static_cast<std::size_t>(i)];
    for (int j = c.degree(); j >= 0; --j) {
      const Rational& q = c[static_cast<std::size_t>(j)];
      if (is_zero(q)) continue;
      Rational a = abs(q);
      if (q < 0)
        out += "-";
      else if (!out.empty())
        out += "+";
      const bool unit = a == 1;
      if (!unit || (i == 0 && j == 0)) out += to_string(a);
      if (i >= 1) out += "M";
      if (i >= 2) out += "^" + std::to_string(i);
      if (j >= 1) out += "N";
      if (j >= 2) out += "^" + std::to_string(j);
    }
  }
  return out.empty() ? "0" : out;
}

int term_count(const BiPoly& p) {
  int n = 0;
  for (const auto& c : p.coeffs())
    for (const auto& q : c.coeffs()) n += !is_zero(q);
  return n;
}

BiPoly bipoly_from(std::initializer_list<std::pair<std::pair<int, int>, long>> terms) {
  std::vector<QPoly> c;
  for (const auto& [mn, v] : terms) {
    const auto [i, j] = mn;
    if (static_cast<int>(c.size()) <= i) c.resize(static_cast<std::size_t>(i) + 1);
    c[static_cast<std::size_t>(i)] += QPoly::monomial(Rational(v), static_cast<std::size_t>(j));
  }
  return BiPoly(std::move(c));
}

// Splits an integer-coefficient polynomial into recognised factors.
struct Factored {
  std::vector<std::string> factors;
  BiPoly rest;
};

Factored peel_factors(BiPoly p, const std::vector<std::pair<BiPoly, std::string>>& candidates) {
  Factored f;
  for (const auto& [cand, name] : candidates) {
    int k = 0;
    while (p.degree() >= 0 && !(p.degree() == 0 && p[0].degree() == 0)) {
      auto q = try_divide(p, cand);
      if (!q) break;
      p = std::move(*q);
      ++k;
    }
    if (k == 0) continue;
    std::string s = name;
    if (k > 1) {
      if (s.size() > 1 && s.front() != '(') s = "(" + s + ")";
      s += "^" + std::to_string(k);
    }
    f.factors.push_back(s);
  }
  f.rest = std::move(p);
  return f;
}

bool is_unit(const BiPoly& p) { return p.degree() == 0 && p[0].degree() == 0 && is_one(p[0][0]); }

}  // namespace

QPoly bipoly_content(const BiPoly& p) {
  QPoly g;
  for (const auto& c : p.coeffs()) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return b.is_zero() ? BiPoly() : primitive_part(b) * bipoly_content(b);
  if (b.is_zero()) return primitive_part(a) * bipoly_content(a);
  if (a.degree() == 0) return BiPoly(gcd(a[0], bipoly_content(b)));
  if (b.degree() == 0) return BiPoly(gcd(b[0], bipoly_content(a)));
  const QPoly c = gcd(bipoly_content(a), bipoly_content(b));
  BiPoly A = primitive_part(a);
  BiPoly B = primitive_part(b);
  if (A.degree() < B.degree()) std::swap(A, B);
  while (!B.is_zero()) {
    if (B.degree() == 0) {
      A = BiPoly(QPoly(1));
      break;
    }
    BiPoly R = pseudo_remainder(A, B);
    A = std::move(B);
    B = R.is_zero() ? R : primitive_part(R);
  }
  A = primitive_part(A);
  return scale(A * BiPoly(c), Rational(1) / lex_leading(A * BiPoly(c)));
}

BiPoly bipoly_exact_div(const BiPoly& a, const BiPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw Error(ErrorCode::InexactDivision, "bivariate division left a remainder");
  return *q;
}

Rational bipoly_coeff(const BiPoly& p, int i, int j) {
  if (i < 0 || i > p.degree()) return Rational(0);
  return p[static_cast<std::size_t>(i)].coeff(static_cast<std::size_t>(j));
}

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  const Integer l = coeff_lcm_den(p);
  std::string body = integer_bipoly_string(scale(p, Rational(l)));
  if (l == 1) return body;
  return (term_count(p) == 1 ? body : "(" + body + ")") + "/" + l.get_str();
}

// ---------------------------------------------------------------------------

MNRational::MNRational(const Rational& c) : num_(QPoly(c)), den_(QPoly(1)) {}
MNRational::MNRational(BiPoly num) : num_(std::move(num)), den_(QPoly(1)) {}
MNRational::MNRational(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }
MNRational::MNRational(BiPoly num, BiPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {
  fix_scale();
}

MNRational MNRational::M() { return MNRational(BiPoly::variable()); }
MNRational MNRational::N() { return MNRational(BiPoly(QPoly::variable())); }

void MNRational::fix_scale() {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (num_.is_zero()) {
    den_ = BiPoly(QPoly(1));
    return;
  }
  const Rational lc = graded_lex_leading(den_);
  if (!is_one(lc)) {
    const Rational inv = Rational(1) / lc;
    num_ = scale(num_, inv);
    den_ = scale(den_, inv);
  }
}

void MNRational::reduce() {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (!num_.is_zero()) {
    BiPoly g = bipoly_gcd(num_, den_);
    if (!is_unit(g) && !(g.degree() == 0 && g[0].degree() == 0)) {
      num_ = bipoly_exact_div(num_, g);
      den_ = bipoly_exact_div(den_, g);
    }
  }
  fix_scale();
}

MNRational operator+(const MNRational& a, const MNRational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return MNRational(a.num_ + b.num_, a.den_);
  if (a.den_is_m_free() && b.den_is_m_free()) {
    // Work over the lcm of the two N-only denominators.
    const QPoly g = gcd(a.den_[0], b.den_[0]);
    const QPoly fa = exact_div(b.den_[0], g);
    const QPoly fb = exact_div(a.den_[0], g);
    BiPoly n = a.num_ * BiPoly(fa) + b.num_ * BiPoly(fb);
    return MNRational(std::move(n), BiPoly(a.den_[0] * fa));
  }
  return MNRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

MNRational operator-(const MNRational& a) { return MNRational(-a.num_, a.den_, MNRational::Reduced{}); }
MNRational operator-(const MNRational& a, const MNRational& b) { return a + (-b); }

MNRational operator*(const MNRational& a, const MNRational& b) {
  if (a.is_zero() || b.is_zero()) return MNRational();
  const BiPoly g1 = bipoly_gcd(a.num_, b.den_);
  const BiPoly g2 = bipoly_gcd(b.num_, a.den_);
  BiPoly n = bipoly_exact_div(a.num_, g1) * bipoly_exact_div(b.num_, g2);
  BiPoly d = bipoly_exact_div(a.den_, g2) * bipoly_exact_div(b.den_, g1);
  return MNRational(std::move(n), std::move(d), MNRational::Reduced{});
}

MNRational operator/(const MNRational& a, const MNRational& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero fraction");
  return a * MNRational(b.den_, b.num_, MNRational::Reduced{});
}

Rational MNRational::evaluate(const Rational& m, const Rational& n) const {
  auto eval = [&](const BiPoly& p) {
    Rational acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * m + p[i].evaluate<Rational>(n);
    return acc;
  };
  const Rational d = eval(den_);
  if (dmh::is_zero(d)) throw Error(ErrorCode::DivisionByZero, "evaluation at a pole");
  return eval(num_) / d;
}

std::string MNRational::to_string() const {
  if (den_is_m_free() && den_[0].degree() == 0) return dmh::to_string(scale(num_, Rational(1) / den_[0][0]));
  Integer l = coeff_lcm_den(num_);
  const Integer ld = coeff_lcm_den(den_);
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), ld.get_mpz_t());
  const BiPoly n = scale(num_, Rational(l));
  const BiPoly d = scale(den_, Rational(l));
  auto wrap = [](const BiPoly& p, bool is_den) {
    std::string s = integer_bipoly_string(p);
    if (term_count(p) > 1) return "(" + s + ")";
    // A coefficient followed by variables would bind as (x/c)*vars.
    const bool bare = s.find_first_not_of("0123456789") == std::string::npos || std::isdigit(static_cast<unsigned char>(s[0])) == 0;
    return (is_den && !bare) ? "(" + s + ")" : s;
  };
  return wrap(n, false) + "/" + wrap(d, true);
}

std::string MNRational::to_factored_string() const {
  if (num_.is_zero()) return "0";
  Integer l = coeff_lcm_den(num_);
  const Integer ld = coeff_lcm_den(den_);
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), ld.get_mpz_t());
  BiPoly n = scale(num_, Rational(l));
  BiPoly d = scale(den_, Rational(l));
  Integer cn = coeff_content(n);
  Integer cd = coeff_content(d);
  n = scale(n, Rational(1) / Rational(cn));
  d = scale(d, Rational(1) / Rational(cd));
  if (lex_leading(d) < 0) {
    d = -d;
    cd = -cd;
  }
  bool negative = (cd < 0);
  cd = abs(cd);
  Rational ratio(cn, cd);
  ratio.canonicalize();

  const BiPoly M = bipoly_from({{{1, 0}, 1}});
  const BiPoly N = bipoly_from({{{0, 1}, 1}});
  std::vector<std::pair<BiPoly, std::string>> num_cands{
      {M, "M"}, {bipoly_from({{{1, 0}, 1}, {{0, 1}, -1}}), "(M-N)"}, {bipoly_from({{{1, 0}, 2}, {{0, 1}, -1}}), "(2M-N)"}};
  std::vector<std::pair<BiPoly, std::string>> den_cands{{N, "N"}};
  for (long j = 1; j <= 12; ++j)
    den_cands.push_back({bipoly_from({{{0, 2}, 1}, {{0, 0}, -j * j}}), "(N^2-" + std::to_string(j * j) + ")"});

  Factored fn = peel_factors(n, num_cands);
  Factored fd = peel_factors(d, den_cands);
  if (lex_leading(fn.rest) < 0) {
    fn.rest = -fn.rest;
    negative = !negative;
  }
  if (lex_leading(fd.rest) < 0) {
    fd.rest = -fd.rest;
    negative = !negative;
  }

  const bool has_dcoef = ratio.get_den() != 1;
  const std::size_t items = (has_dcoef ? 1 : 0) + fd.factors.size() + (is_unit(fd.rest) ? 0 : 1);
  const bool has_coef = ratio.get_num() != 1;
  std::string num_str = has_coef ? ratio.get_num().get_str() : "";
  for (const auto& s : fn.factors) num_str += s;
  if (!is_unit(fn.rest)) {
    const std::string r = integer_bipoly_string(fn.rest);
    const bool wrap = term_count(fn.rest) > 1 && (has_coef || !fn.factors.empty() || items > 0);
    num_str += wrap ? "(" + r + ")" : r;
  }
  if (num_str.empty()) num_str = "1";

  std::string den_str = has_dcoef ? ratio.get_den().get_str() : "";
  for (const auto& s : fd.factors) den_str += s;
  if (!is_unit(fd.rest)) {
    const std::string r = integer_bipoly_string(fd.rest);
    den_str += (term_count(fd.rest) > 1 && items > 1) ? "(" + r + ")" : r;
  }
  std::string out = negative ? "-" : "";
  out += num_str;
  if (items > 0) {
    const bool single = items == 1 && (is_unit(fd.rest) || term_count(fd.rest) == 1);
    out += "/" + (single ? den_str : "(" + den_str + ")");
  }
  return out;
}

MNRational parse_mnrational(const std::string& text) {
  std::map<char, MNRational> vars{{'M', MNRational::M()}, {'N', MNRational::N()}};
  return parse_expression<MNRational>(text, vars);
}

TruncSeries<QRatFn> largeN_expand(const MNRational& r, int order) {
  if (order < 0) order = 0;
  // M = a N with a = 1/(1-t); collect each side by total N-degree.
  const QRatFn a = QRatFn(QPoly(1)) / QRatFn(QPoly({Rational(1), Rational(-1)}));
  auto collect = [&](const BiPoly& p) {
    std::vector<QRatFn> byN;
    QRatFn apow(1);
    for (int i = 0; i <= p.degree(); ++i) {
      const QPoly& c = p[static_cast<std::size_t>(i)];
      for (int j = 0; j <= c.degree(); ++j) {
        const Rational& q = c[static_cast<std::size_t>(j)];
        if (is_zero(q)) continue;
        const std::size_t e = static_cast<std::size_t>(i + j);
        if (byN.size() <= e) byN.resize(e + 1);
        byN[e] += apow * QRatFn(q);
      }
      apow *= a;
    }
    while (!byN.empty() && byN.back().is_zero()) byN.pop_back();
    return byN;
  };
  const auto num = collect(r.num());
  const auto den = collect(r.den());
  if (num.empty()) return TruncSeries<QRatFn>(order);
  if (den.empty()) throw Error(ErrorCode::DivisionByZero, "denominator vanishes after substitution");
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  if (dn > dd) throw Error(ErrorCode::PoleAtInfinity, "substituted function grows with N");
  const int shift = dd - dn;
  // In u = 1/N: num = N^dn P(u), den = N^dd Q(u).
  TruncSeries<QRatFn> P(order), Q(order);
  for (int e = 0; e <= order; ++e) {
    if (dn - e >= 0) P[static_cast<std::size_t>(e)] = num[static_cast<std::size_t>(dn - e)];
    if (dd - e >= 0) Q[static_cast<std::size_t>(e)] = den[static_cast<std::size_t>(dd - e)];
  }
  const TruncSeries<QRatFn> ratio = P * Q.inverse();
  TruncSeries<QRatFn> out(order);
  for (int e = shift; e <= order; ++e) out[static_cast<std::size_t>(e)] = ratio[static_cast<std::size_t>(e - shift)];
  return out;
}

}  // namespace dmh
