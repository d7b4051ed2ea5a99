#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewgroup {

enum class ErrorKind {
  InvalidInput,
  AssociativityViolation,
  UnitViolation,
  ClosureViolation,
  NotIdempotent,
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotHomomorphism,
  NotAutomorphism,
  NotASubgroup,
  NotARepresentation,
  AlgebraMismatch,
  ModuleAlgebraMismatch,
  NotSemisimple,
  NotSimple,
  NotProjective,
  CocycleMismatch,
  DegenerateSample,
  NumericalInconsistency,
  ParseError,
  ValidationError,
  UnknownFixture,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The message carries the witness
/// (offending index, pair or residual).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace skewgroup
