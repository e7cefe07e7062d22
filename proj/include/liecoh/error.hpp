#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace liecoh {

enum class ErrorKind {
  ParseError,
  NonSquare,
  DimensionMismatch,
  AmbientMismatch,
  NotALieAlgebra,
  UnknownName,
  MissingParam,
  BadParam,
  BadIndex,
  NotAdapted,
  NotFiliformForm,
  RangeError,
  UnsupportedDim,
  PreconditionViolated,
  NoSolution,
  SingularCocycle,
  NotACocycle,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so the CLI can map it
/// to an exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace liecoh
