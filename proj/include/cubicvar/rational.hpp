#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cubicvar {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational kept in lowest terms with a positive denominator.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(std::int64_t v) : num_(v) {}  // NOLINT(google-explicit-constructor)
    ExactRational(BigInt num, BigInt den);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }
    bool is_integer() const noexcept { return den_ == 1; }

    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const;

    ExactRational operator-() const;
    friend ExactRational operator+(const ExactRational& a, const ExactRational& b);
    friend ExactRational operator-(const ExactRational& a, const ExactRational& b);
    friend ExactRational operator*(const ExactRational& a, const ExactRational& b);
    friend ExactRational operator/(const ExactRational& a, const ExactRational& b);

    friend bool operator==(const ExactRational& a, const ExactRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);

private:
    BigInt num_{0};
    BigInt den_{1};
};

}  // namespace cubicvar
