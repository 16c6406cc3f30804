#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pact {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  AmbientMismatch,
  InvalidStructure,
  NotMultiplicativelyClosed,
  NotContained,
  NotAnIdeal,
  NotCentralIdempotent,
  NotBelowDomain,
  NotBelowRange,
  NotInductive,
  NotUnital,
  NotPreunital,
  NotStrong,
  NotPseudoassociative,
  NotGlobal,
  NotMonotone,
  GroupoidMismatch,
  BudgetExceeded,
  NotAssociative,
  NotAGlobalization,
  TheoremViolation,
  Parse,
  UnresolvedReference,
  UnknownTask,
  Io,
};

std::string_view to_string(ErrorCode code);

/// The single exception type thrown by the library. `code()` identifies the
/// failed precondition; `subject()` names the offending arrow/element when
/// there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string subject = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        subject_(std::move(subject)) {}

  ErrorCode code() const { return code_; }
  const std::string& subject() const { return subject_; }

 private:
  ErrorCode code_;
  std::string subject_;
};

}  // namespace pact
