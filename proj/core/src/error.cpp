#include "psop/error.hpp"

namespace psop {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ZeroResultant: return "ZeroResultant";
    case ErrorKind::DuplicateElements: return "DuplicateElements";
    case ErrorKind::LexError: return "LexError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EvaluationError: return "EvaluationError";
    case ErrorKind::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorKind::ZeroDivisionInRatio: return "ZeroDivisionInRatio";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::BranchSelectionFailed: return "BranchSelectionFailed";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::InconsistentSigmas: return "InconsistentSigmas";
    case ErrorKind::DegenerateRoots: return "DegenerateRoots";
    case ErrorKind::SingularSystem: return "SingularSystem";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

Error::Error(ErrorKind kind, const std::string& message, Span span)
    : std::runtime_error(std::string(to_string(kind)) + " at " +
                         std::to_string(span.begin) + ".." +
                         std::to_string(span.end) + ": " + message),
      kind_(kind),
      span_(span) {}

}  // namespace psop
