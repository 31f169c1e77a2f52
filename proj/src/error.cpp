#include "fuzzyts/error.hpp"

namespace fuzzyts {

std::string_view code_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::EmptyTimeScale: return "EmptyTimeScale";
    case ErrorCode::InvalidInterval: return "InvalidInterval";
    case ErrorCode::PointNotInScale: return "PointNotInScale";
    case ErrorCode::PointNotInKappa: return "PointNotInKappa";
    case ErrorCode::DegenerateQuotient: return "DegenerateQuotient";
    case ErrorCode::NotSorted: return "NotSorted";
    case ErrorCode::LevelMonotonicityViolation: return "LevelMonotonicityViolation";
    case ErrorCode::EmptyCore: return "EmptyCore";
    case ErrorCode::ResolutionMismatch: return "ResolutionMismatch";
    case ErrorCode::GHDifferenceNotFuzzy: return "GHDifferenceNotFuzzy";
    case ErrorCode::NonConvergent: return "NonConvergent";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::QuadratureDepthExceeded: return "QuadratureDepthExceeded";
    case ErrorCode::IntegrandNotFuzzyAt: return "IntegrandNotFuzzyAt";
    case ErrorCode::ResultNotFuzzy: return "ResultNotFuzzy";
    case ErrorCode::InvalidBounds: return "InvalidBounds";
    case ErrorCode::ClosedFormMismatch: return "ClosedFormMismatch";
    case ErrorCode::NotQuasiRegular: return "NotQuasiRegular";
    case ErrorCode::NablaSigmaNotPiecewiseConstant: return "NablaSigmaNotPiecewiseConstant";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::SchemaError: return "SchemaError";
    }
    return "Unknown";
}

void raise(ErrorCode code, const std::string& message)
{
    throw Error(code, message);
}

} // namespace fuzzyts
