#include "coxlow/error.hpp"

namespace coxlow {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonSymmetricMatrix: return "NonSymmetricMatrix";
    case ErrorCode::InvalidBondLabel: return "InvalidBondLabel";
    case ErrorCode::OverrideOnFiniteBond: return "OverrideOnFiniteBond";
    case ErrorCode::OverrideAboveMinusOne: return "OverrideAboveMinusOne";
    case ErrorCode::IrrationalEntryForExactBackend:
      return "IrrationalEntryForExactBackend";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ClosureCapExceeded: return "ClosureCapExceeded";
    case ErrorCode::NonReducedInput: return "NonReducedInput";
    case ErrorCode::GeneratorOutOfRange: return "GeneratorOutOfRange";
    case ErrorCode::NumericallyAmbiguous: return "NumericallyAmbiguous";
    case ErrorCode::RankNotThree: return "RankNotThree";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::CyclicGraph: return "CyclicGraph";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::ZeroSum: return "ZeroSum";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

}  // namespace coxlow
