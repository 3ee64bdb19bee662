#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace psop {

enum class ErrorKind {
  InvalidOrder,
  InvalidArgument,
  ZeroResultant,
  DuplicateElements,
  LexError,
  ParseError,
  EvaluationError,
  ZeroLeadingCoefficient,
  ZeroDivisionInRatio,
  NonConvergent,
  BranchSelectionFailed,
  NoConvergence,
  ArityMismatch,
  UnsupportedDegree,
  InconsistentSigmas,
  DegenerateRoots,
  SingularSystem,
};

std::string_view to_string(ErrorKind kind);

// Half-open byte range [begin, end) into the source text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

// Every library failure is reported through this type; `kind()` is the
// stable discriminator, the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  Error(ErrorKind kind, const std::string& message, Span span);

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<Span>& span() const noexcept { return span_; }

 private:
  ErrorKind kind_;
  std::optional<Span> span_;
};

}  // namespace psop
