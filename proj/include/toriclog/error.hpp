#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toriclog {

// Every failure the library can raise is tagged with one of these kinds; the
// CLI maps kinds to exit codes and reports use the names verbatim.
enum class ErrorKind {
  DimensionMismatch,
  NonUnitImage,
  NotInvertible,
  ParseError,
  MalformedFan,
  NonPrimitiveRay,
  DuplicateRay,
  NonSmoothCone,
  IncompleteFan,
  RayNotInCone,
  LogFrameFailure,
  InvalidFiltration,
  IncompatibleFiltrations,
  CocycleFailure,
  NotSplit,
  NoCoboundary,
  GaugeMismatch,
  NonzeroCurvature,
  FlatFrameFailure,
  NotLogarithmic,
  ChartDisagreement,
  ResidueMismatch,
  ChernMismatch,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace toriclog
