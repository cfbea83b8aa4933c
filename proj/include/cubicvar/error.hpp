#pragma once

#include <stdexcept>
#include <string>

namespace cubicvar {

enum class ErrorKind {
    NotPrime,
    TooSmall,
    BudgetExceeded,
    ZeroPolynomial,
    WrongResidueClass,
    ZeroParameter,
    BothZero,
    LengthMismatch,
    InvalidConfig,
    IoError,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace cubicvar
