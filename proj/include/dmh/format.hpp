#pragma once

// The canonical text forms shared by the library, the tests and the CLI.
// Polynomials print in descending degree over a single positive common
// denominator: "5t^2+5t", "t/2", "(5t^2+5t)/3".

#include "dmh/poly.hpp"
#include "dmh/ratfn.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace dmh {

std::string to_string(const QPoly& p, char var = 't');
std::string to_string(const QRatFn& f, char var = 't');

QPoly parse_poly(std::string_view text, char var = 't');
QRatFn parse_ratfn(std::string_view text, char var = 't');

/// Ascending list of "p/q" strings.
std::vector<std::string> to_coeff_strings(const QPoly& p);
QPoly from_coeff_strings(const std::vector<std::string>& coeffs);

/// Fixed-point decimal with the given number of digits after the point,
/// rounded half away from zero.
std::string to_decimal(const Rational& q, int digits);
/// Exact value of a decimal string such as "-5.0010564".
Rational parse_decimal(std::string_view text);

}  // namespace dmh
