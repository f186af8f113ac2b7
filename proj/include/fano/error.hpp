#ifndef FANO_ERROR_HPP
#define FANO_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace fano {

enum class ErrorCode {
    SyntaxError,
    VariableOutOfRange,
    NonIntegerExponent,
    FieldMismatch,
    ArityMismatch,
    IndexOutOfRange,
    NotHomogeneous,
    NegativeDegree,
    InvalidDegree,
    InvalidRange,
    InvalidField,
    NotOnFano,
    ZeroCount,
    BasisMismatch,
    DivisionByZero,
};

std::string_view to_string(ErrorCode code);

/// Every domain failure in the library is reported through this type.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace fano

#endif // FANO_ERROR_HPP
