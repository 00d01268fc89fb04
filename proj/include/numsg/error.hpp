#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace numsg {

enum class ErrorKind {
  NonCoprime,
  NotMinimal,
  SymmetricInput,
  InconsistentMatrix,
  InvalidUW,
  ParityViolation,
  Overflow,
  DomainError,
  EmptyGrid,
  RadiusTooLarge,
  EmptyAdmissibleSet,
  DegenerateRange,
  BudgetExceeded,
  IoError,
  MixedKinds,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure surfaced by the library is one of these; the CLI maps the
// kind onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace numsg
