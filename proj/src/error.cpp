#include "evalg/error.hpp"

namespace evalg {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotDivisible: return "NotDivisible";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::UnsupportedPair: return "UnsupportedPair";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::CoercionFailure: return "CoercionFailure";
        case ErrorCode::RingMismatch: return "RingMismatch";
        case ErrorCode::ZeroElement: return "ZeroElement";
        case ErrorCode::DuplicatePoint: return "DuplicatePoint";
        case ErrorCode::CoefficientOutsideL: return "CoefficientOutsideL";
        case ErrorCode::NotFoundWithinBudget: return "NotFoundWithinBudget";
        case ErrorCode::UnsupportedQuotient: return "UnsupportedQuotient";
        case ErrorCode::InvertibleModulus: return "InvertibleModulus";
        case ErrorCode::KindMismatch: return "KindMismatch";
        case ErrorCode::DepthExceeded: return "DepthExceeded";
        case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
        case ErrorCode::WindowExhausted: return "WindowExhausted";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

void raise(ErrorCode code, const std::string& message) {
    throw Error(code, std::string(to_string(code)) + ": " + message);
}

}  // namespace evalg
