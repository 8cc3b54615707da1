#include "confexcess/errors.hpp"

namespace confexcess {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::KNotDividing: return "KNotDividing";
    case ErrorCode::WrongField: return "WrongField";
    case ErrorCode::MismatchedFields: return "MismatchedFields";
    case ErrorCode::MalformedJacobi: return "MalformedJacobi";
    case ErrorCode::BadEll: return "BadEll";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::BadQ: return "BadQ";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::ProfileViolation: return "ProfileViolation";
    case ErrorCode::NotTwoDesign: return "NotTwoDesign";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::NonIntegralCount: return "NonIntegralCount";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::CertificationFailed: return "CertificationFailed";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotInGroup: return "NotInGroup";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace confexcess
