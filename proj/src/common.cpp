#include "fz/common.hpp"

namespace fz {

const char* errc_name(Errc e) noexcept {
  switch (e) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NonPositiveLength: return "NonPositiveLength";
    case Errc::DivergentTail: return "DivergentTail";
    case Errc::AbscissaViolation: return "AbscissaViolation";
    case Errc::ToleranceUnreachable: return "ToleranceUnreachable";
    case Errc::NonPositiveScale: return "NonPositiveScale";
    case Errc::TruncationTooSmall: return "TruncationTooSmall";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::InvalidCantorParameters: return "InvalidCantorParameters";
    case Errc::DepthOverflow: return "DepthOverflow";
    case Errc::NonPositiveT: return "NonPositiveT";
    case Errc::InsufficientDepth: return "InsufficientDepth";
    case Errc::PoleHit: return "PoleHit";
    case Errc::EntireFactorFailure: return "EntireFactorFailure";
    case Errc::NoRealRoot: return "NoRealRoot";
    case Errc::SeedGridTooCoarse: return "SeedGridTooCoarse";
    case Errc::NotAPole: return "NotAPole";
    case Errc::ContourContainsOtherPole: return "ContourContainsOtherPole";
    case Errc::DegenerateDimension: return "DegenerateDimension";
    case Errc::AllZeroCoefficients: return "AllZeroCoefficients";
    case Errc::EmptyWindow: return "EmptyWindow";
    case Errc::UnsupportedKind: return "UnsupportedKind";
    case Errc::NonIntegrable: return "NonIntegrable";
    case Errc::InsufficientRange: return "InsufficientRange";
    case Errc::DegenerateD: return "DegenerateD";
    case Errc::IncompatibleUnion: return "IncompatibleUnion";
    case Errc::MeasureDivergence: return "MeasureDivergence";
    case Errc::UnknownExample: return "UnknownExample";
    case Errc::GeneratorValidationFailed: return "GeneratorValidationFailed";
    case Errc::QuadratureFailure: return "QuadratureFailure";
  }
  return "Unknown";
}

bool is_validation_error(Errc e) noexcept {
  switch (e) {
    case Errc::ToleranceUnreachable:
    case Errc::PoleHit:
    case Errc::EntireFactorFailure:
    case Errc::SeedGridTooCoarse:
    case Errc::ContourContainsOtherPole:
    case Errc::NonIntegrable:
    case Errc::GeneratorValidationFailed:
    case Errc::QuadratureFailure:
    case Errc::NoRealRoot:
      return false;
    default:
      return true;
  }
}

}  // namespace fz
