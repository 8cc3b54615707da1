#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace confexcess {

enum class ErrorCode {
  NotPrime,
  DegreeTooLarge,
  ZeroInverse,
  KNotDividing,
  WrongField,
  MismatchedFields,
  MalformedJacobi,
  BadEll,
  IdentityViolation,
  BadQ,
  SearchExhausted,
  ProfileViolation,
  NotTwoDesign,
  BadOrder,
  NonIntegralCount,
  IndexOutOfRange,
  CertificationFailed,
  BudgetExceeded,
  NotInGroup,
  BadParameter,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace confexcess
