#include "cubicvar/rational.hpp"

#include <stdexcept>

namespace cubicvar {

ExactRational::ExactRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::string ExactRational::to_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

ExactRational ExactRational::operator-() const {
    ExactRational r = *this;
    r.num_ = -r.num_;
    return r;
}

ExactRational operator+(const ExactRational& a, const ExactRational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

ExactRational operator-(const ExactRational& a, const ExactRational& b) { return a + (-b); }

ExactRational operator*(const ExactRational& a, const ExactRational& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

ExactRational operator/(const ExactRational& a, const ExactRational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace cubicvar
