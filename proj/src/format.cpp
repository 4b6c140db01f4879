#include "dmh/format.hpp"

#include "dmh/parse.hpp"

#include <map>

namespace dmh {

namespace {

// Integer-coefficient polynomial, descending, no spaces.
std::string integer_poly_string(const std::vector<Integer>& c, char var) {
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    Integer a = abs(c[i]);
    if (c[i] < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (i == 0 || a != 1) out += a.get_str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string to_string(const QPoly& p, char var) {
  if (p.is_zero()) return "0";
  Integer den = 1;
  for (const auto& q : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> c;
  c.reserve(p.size());
  for (const auto& q : p.coeffs()) {
    Rational s = q * den;
    c.push_back(s.get_num());
  }
  std::string body = integer_poly_string(c, var);
  if (den == 1) return body;
  int terms = 0;
  for (const auto& x : c) terms += x != 0;
  if (terms == 1) return body + "/" + den.get_str();
  return "(" + body + ")/" + den.get_str();
}

std::string to_string(const QRatFn& f, char var) {
  if (f.is_polynomial()) return to_string(f.num(), var);
  auto wrap = [&](const QPoly& p) {
    std::string s = to_string(p, var);
    int terms = 0;
    for (const auto& q : p.coeffs()) terms += !is_zero(q);
    bool simple = terms == 1 && s.find('/') == std::string::npos;
    return simple ? s : "(" + s + ")";
  };
  return wrap(f.num()) + "/" + wrap(f.den());
}

QRatFn parse_ratfn(std::string_view text, char var) {
  std::map<char, QRatFn> vars{{var, QRatFn::variable()}};
  return parse_expression<QRatFn>(text, vars);
}

QPoly parse_poly(std::string_view text, char var) {
  QRatFn f = parse_ratfn(text, var);
  if (!f.is_polynomial())
    throw Error(ErrorCode::ParseError, "'" + std::string(text) + "' is not a polynomial");
  return f.num() * (Rational(1) / f.den().leading());
}

std::vector<std::string> to_coeff_strings(const QPoly& p) {
  std::vector<std::string> out;
  out.reserve(p.size());
  for (const auto& q : p.coeffs()) out.push_back(to_string(q));
  return out;
}

QPoly from_coeff_strings(const std::vector<std::string>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& s : coeffs) c.push_back(parse_rational(s));
  return QPoly(std::move(c));
}

std::string to_decimal(const Rational& q, int digits) {
  if (digits < 0) digits = 0;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = abs(q) * scale;
  // Round half away from zero.
  Integer n = scaled.get_num() * 2 + scaled.get_den();
  Integer d = scaled.get_den() * 2;
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  std::string digits_str = r.get_str();
  if (digits > 0) {
    if (digits_str.size() <= static_cast<std::size_t>(digits))
      digits_str.insert(0, static_cast<std::size_t>(digits) + 1 - digits_str.size(), '0');
    digits_str.insert(digits_str.size() - static_cast<std::size_t>(digits), ".");
  }
  bool nonzero = r != 0;
  return (q < 0 && nonzero ? "-" : "") + digits_str;
}

Rational parse_decimal(std::string_view text) {
  std::string s(text);
  const auto dot = s.find('.');
  if (dot == std::string::npos) return parse_rational(s);
  const std::string frac = s.substr(dot + 1);
  if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorCode::ParseError, "bad decimal '" + s + "'");
  const bool negative = !s.empty() && s[0] == '-';
  std::string whole = s.substr(0, dot);
  if (whole == "-" || whole == "+" || whole.empty()) whole += "0";
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(frac.size()));
  Rational f(Integer(frac, 10), scale);
  f.canonicalize();
  const Rational w = parse_rational(whole);
  return negative ? Rational(w - f) : Rational(w + f);
}

}  // namespace dmh
