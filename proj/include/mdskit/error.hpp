#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mdskit {

enum class ErrorCode {
    ReducibleModulus,
    NotPrimitive,
    FieldMismatch,
    DivisionByZero,
    ContextMismatch,
    NonCentralModulus,
    NonCommutingDerivation,
    ZeroConstantTerm,
    NotMonic,
    NotDivisor,
    DimensionMismatch,
    SingularMatrix,
    NotDiagonal,
    NotPermutation,
    EntriesNotFixed,
    OrderTooLarge,
    SearchSpaceTooLarge,
    BaseNotMds,
    ParseError,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above; the
/// CLI maps them to exit status 2.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace mdskit
