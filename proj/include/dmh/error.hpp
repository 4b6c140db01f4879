#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dmh {

enum class ErrorCode {
  NonUnitLinearTerm,
  PoleAtInfinity,
  DivisionByZero,
  DegreeMismatch,
  NegativeWeight,
  WeightMismatch,
  DegreeTooLarge,
  BoundExceeded,
  SingularSystem,
  LengthMismatch,
  ZeroPolynomial,
  BoxNotIsolating,
  NotRealRooted,
  DegreeGap,
  OddPartInS,
  DepthExceeded,
  ExpansionPointPole,
  ParseError,
  InexactDivision,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dmh
