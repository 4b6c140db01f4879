#include "dmh/rational.hpp"

#include "dmh/error.hpp"

#include <cctype>

namespace dmh {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonUnitLinearTerm: return "NonUnitLinearTerm";
    case ErrorCode::PoleAtInfinity: return "PoleAtInfinity";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::BoxNotIsolating: return "BoxNotIsolating";
    case ErrorCode::NotRealRooted: return "NotRealRooted";
    case ErrorCode::DegreeGap: return "DegreeGap";
    case ErrorCode::OddPartInS: return "OddPartIn_s";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::ExpansionPointPole: return "ExpansionPointPole";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InexactDivision: return "InexactDivision";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational");
  const auto slash = s.find('/');
  auto check_int = [&](const std::string& part) {
    std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (start == part.size()) throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
    for (std::size_t i = start; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
  };
  std::string num = s.substr(0, slash);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  check_int(num);
  Rational q;
  if (slash == std::string::npos) {
    q = Rational(Integer(num, 10));
  } else {
    std::string den = s.substr(slash + 1);
    check_int(den);
    Integer d(den, 10);
    if (d == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + s + "'");
    q = Rational(Integer(num, 10), d);
    q.canonicalize();
  }
  return q;
}

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (is_zero(base)) throw Error(ErrorCode::DivisionByZero, "zero to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Rational r(1);
  Rational b = base;
  unsigned long e = static_cast<unsigned long>(exponent);
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace dmh
