#include "cubicvar/error.hpp"

namespace cubicvar {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::TooSmall: return "TooSmall";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::WrongResidueClass: return "WrongResidueClass";
        case ErrorKind::ZeroParameter: return "ZeroParameter";
        case ErrorKind::BothZero: return "BothZero";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::InvalidConfig: return "InvalidConfig";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace cubicvar
