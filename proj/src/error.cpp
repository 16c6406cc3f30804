#include "pact/error.hpp"

namespace pact {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::InvalidStructure: return "InvalidStructure";
    case ErrorCode::NotMultiplicativelyClosed: return "NotMultiplicativelyClosed";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::NotCentralIdempotent: return "NotCentralIdempotent";
    case ErrorCode::NotBelowDomain: return "NotBelowDomain";
    case ErrorCode::NotBelowRange: return "NotBelowRange";
    case ErrorCode::NotInductive: return "NotInductive";
    case ErrorCode::NotUnital: return "NotUnital";
    case ErrorCode::NotPreunital: return "NotPreunital";
    case ErrorCode::NotStrong: return "NotStrong";
    case ErrorCode::NotPseudoassociative: return "NotPseudoassociative";
    case ErrorCode::NotGlobal: return "NotGlobal";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::GroupoidMismatch: return "GroupoidMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotAGlobalization: return "NotAGlobalization";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::UnresolvedReference: return "UnresolvedReference";
    case ErrorCode::UnknownTask: return "UnknownTask";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace pact
