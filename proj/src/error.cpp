#include "mdskit/error.hpp"

namespace mdskit {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ReducibleModulus: return "ReducibleModulus";
        case ErrorCode::NotPrimitive: return "NotPrimitive";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ContextMismatch: return "ContextMismatch";
        case ErrorCode::NonCentralModulus: return "NonCentralModulus";
        case ErrorCode::NonCommutingDerivation: return "NonCommutingDerivation";
        case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::NotDivisor: return "NotDivisor";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::NotDiagonal: return "NotDiagonal";
        case ErrorCode::NotPermutation: return "NotPermutation";
        case ErrorCode::EntriesNotFixed: return "EntriesNotFixed";
        case ErrorCode::OrderTooLarge: return "OrderTooLarge";
        case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
        case ErrorCode::BaseNotMds: return "BaseNotMds";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace mdskit
