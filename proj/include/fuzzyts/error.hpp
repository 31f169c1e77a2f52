#ifndef FUZZYTS_ERROR_HPP
#define FUZZYTS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace fuzzyts {

// Machine-readable error taxonomy. The names returned by code_name() are part
// of the CLI's JSON contract and must not change.
enum class ErrorCode {
    EmptyTimeScale,
    InvalidInterval,
    PointNotInScale,
    PointNotInKappa,
    DegenerateQuotient,
    NotSorted,
    LevelMonotonicityViolation,
    EmptyCore,
    ResolutionMismatch,
    GHDifferenceNotFuzzy,
    NonConvergent,
    AlphaOutOfRange,
    QuadratureDepthExceeded,
    IntegrandNotFuzzyAt,
    ResultNotFuzzy,
    InvalidBounds,
    ClosedFormMismatch,
    NotQuasiRegular,
    NablaSigmaNotPiecewiseConstant,
    NotHomogeneous,
    SchemaError,
};

std::string_view code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    std::string_view name() const noexcept { return code_name(code_); }

private:
    ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

} // namespace fuzzyts

#endif
