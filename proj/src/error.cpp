#include "skewgroup/error.hpp"

namespace skewgroup {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::AssociativityViolation: return "AssociativityViolation";
    case ErrorKind::UnitViolation: return "UnitViolation";
    case ErrorKind::ClosureViolation: return "ClosureViolation";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NotARepresentation: return "NotARepresentation";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::ModuleAlgebraMismatch: return "ModuleAlgebraMismatch";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::NotProjective: return "NotProjective";
    case ErrorKind::CocycleMismatch: return "CocycleMismatch";
    case ErrorKind::DegenerateSample: return "DegenerateSample";
    case ErrorKind::NumericalInconsistency: return "NumericalInconsistency";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
  }
  return "Unknown";
}

}  // namespace skewgroup
