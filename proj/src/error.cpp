#include "flatinc/error.hpp"

namespace flatinc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::MixedAmbient: return "MixedAmbient";
    case ErrorCode::PointInCenter: return "PointInCenter";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::EmptyPointList: return "EmptyPointList";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::GammaOutOfRange: return "GammaOutOfRange";
    case ErrorCode::EmptyConfiguration: return "EmptyConfiguration";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvariantViolated: return "InvariantViolated";
    case ErrorCode::SizeOverflow: return "SizeOverflow";
    case ErrorCode::OddN: return "OddN";
    case ErrorCode::ParameterConflict: return "ParameterConflict";
    case ErrorCode::DivisibilityError: return "DivisibilityError";
    case ErrorCode::RetryLimit: return "RetryLimit";
    case ErrorCode::ParameterError: return "ParameterError";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace flatinc
