#include "numsg/error.hpp"

namespace numsg {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonCoprime: return "NonCoprime";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::SymmetricInput: return "SymmetricInput";
    case ErrorKind::InconsistentMatrix: return "InconsistentMatrix";
    case ErrorKind::InvalidUW: return "InvalidUW";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::EmptyGrid: return "EmptyGrid";
    case ErrorKind::RadiusTooLarge: return "RadiusTooLarge";
    case ErrorKind::EmptyAdmissibleSet: return "EmptyAdmissibleSet";
    case ErrorKind::DegenerateRange: return "DegenerateRange";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::MixedKinds: return "MixedKinds";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace numsg
