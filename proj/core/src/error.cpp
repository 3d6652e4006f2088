#include "walkup/error.hpp"

namespace walkup {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::DuplicateVertexInFacet: return "DuplicateVertexInFacet";
    case Errc::MixedDimensions: return "MixedDimensions";
    case Errc::DuplicateFacet: return "DuplicateFacet";
    case Errc::InvalidLabel: return "InvalidLabel";
    case Errc::FaceNotPresent: return "FaceNotPresent";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::NotPseudomanifoldWithBoundary: return "NotPseudomanifoldWithBoundary";
    case Errc::EmptyBoundary: return "EmptyBoundary";
    case Errc::NotClosedPseudomanifold: return "NotClosedPseudomanifold";
    case Errc::DegreeTooHigh: return "DegreeTooHigh";
    case Errc::TooFewVertices: return "TooFewVertices";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::OddDimension: return "OddDimension";
    case Errc::NonIntegralResult: return "NonIntegralResult";
    case Errc::NotClosedConnected4Manifold: return "NotClosedConnected4Manifold";
    case Errc::NotAFacet: return "NotAFacet";
    case Errc::NotAdmissible: return "NotAdmissible";
    case Errc::WouldCreateDuplicateFacet: return "WouldCreateDuplicateFacet";
    case Errc::NotInducedStandardSphere: return "NotInducedStandardSphere";
    case Errc::CutValidationFailed: return "CutValidationFailed";
    case Errc::NotWalkup: return "NotWalkup";
    case Errc::DimensionTooLow: return "DimensionTooLow";
    case Errc::SubsetSpaceTooLarge: return "SubsetSpaceTooLarge";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(Errc::ParseError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace walkup
