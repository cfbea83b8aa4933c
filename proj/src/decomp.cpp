#include "cubicvar/decomp.hpp"

#include <cmath>
#include <string>

namespace cubicvar {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Smallest remainder below sqrt(p) in the Euclidean sequence of (p, r), with r > p/2.
std::uint64_t cornacchia_descent(std::uint64_t p, std::uint64_t root) {
    if (2 * root < p) root = p - root;
    std::uint64_t a = p;
    std::uint64_t b = root;
    while (b * b >= p) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return b;
}

std::int64_t normalize_sign(std::int64_t v, std::int64_t modulus) {
    // choose the sign with v = -1 mod modulus
    if (((v % modulus) + modulus) % modulus == modulus - 1) return v;
    return -v;
}

}  // namespace

TwoSquare two_square(const PrimeContext& ctx) {
    const std::uint64_t p = ctx.p();
    if (ctx.mod4() != 1) {
        throw Error(ErrorKind::WrongResidueClass, std::to_string(p) + " is 3 mod 4");
    }
    auto root = sqrt_mod(FpElem(ctx, -1));
    const std::uint64_t x = cornacchia_descent(p, root->value());
    const std::uint64_t y = isqrt(p - x * x);

    // exactly one of x, y is odd
    auto odd = static_cast<std::int64_t>(x % 2 == 1 ? x : y);
    auto even = static_cast<std::int64_t>(x % 2 == 1 ? y : x);
    TwoSquare d{normalize_sign(odd, 4), even, p};
    if (static_cast<std::uint64_t>(d.a2 * d.a2 + d.b2 * d.b2) != p) {
        throw std::logic_error("two-square descent failed for p=" + std::to_string(p));
    }
    return d;
}

Eisenstein eisenstein(const PrimeContext& ctx) {
    const std::uint64_t p = ctx.p();
    if (ctx.mod3() != 1) {
        throw Error(ErrorKind::WrongResidueClass, std::to_string(p) + " is 2 mod 3");
    }
    auto root = sqrt_mod(FpElem(ctx, -3));
    const std::uint64_t x = cornacchia_descent(p, root->value());
    const std::uint64_t rest = p - x * x;
    const std::uint64_t y = isqrt(rest / 3);
    if (rest % 3 != 0 || 3 * y * y != rest) {
        throw std::logic_error("Eisenstein descent failed for p=" + std::to_string(p));
    }
    return Eisenstein{normalize_sign(static_cast<std::int64_t>(x), 3),
                      static_cast<std::int64_t>(y), p};
}

}  // namespace cubicvar
