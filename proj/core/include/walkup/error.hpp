#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace walkup {

enum class Errc {
  EmptyInput,
  DuplicateVertexInFacet,
  MixedDimensions,
  DuplicateFacet,
  InvalidLabel,
  FaceNotPresent,
  UnknownVertex,
  NotPseudomanifoldWithBoundary,
  EmptyBoundary,
  NotClosedPseudomanifold,
  DegreeTooHigh,
  TooFewVertices,
  InvalidParameters,
  OddDimension,
  NonIntegralResult,
  NotClosedConnected4Manifold,
  NotAFacet,
  NotAdmissible,
  WouldCreateDuplicateFacet,
  NotInducedStandardSphere,
  CutValidationFailed,
  NotWalkup,
  DimensionTooLow,
  SubsetSpaceTooLarge,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// All library failures are reported through this exception type; `code()`
/// identifies the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Malformed facet-list or JSON input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace walkup
