#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace evalg {

enum class ErrorCode {
    NotDivisible,
    DivisionByZero,
    UnsupportedPair,
    ArityMismatch,
    CoercionFailure,
    RingMismatch,
    ZeroElement,
    DuplicatePoint,
    CoefficientOutsideL,
    NotFoundWithinBudget,
    UnsupportedQuotient,
    InvertibleModulus,
    KindMismatch,
    DepthExceeded,
    AlgebraMismatch,
    WindowExhausted,
    InvalidArgument,
    ParseError,
    Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library. The code is the
/// machine-readable part; what() carries a human diagnostic.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace evalg
