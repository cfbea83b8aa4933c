#pragma once

#include <cstdint>

#include "cubicvar/fp_core.hpp"

namespace cubicvar {

/// p = a2^2 + b2^2 with a2 = -1 (mod 4) and b2 > 0. Exists iff p = 1 (mod 4).
struct TwoSquare {
    std::int64_t a2;
    std::int64_t b2;
    std::uint64_t p;
    friend bool operator==(const TwoSquare&, const TwoSquare&) = default;
};

/// p = a3^2 + 3 b3^2 with a3 = -1 (mod 3) and b3 > 0. Exists iff p = 1 (mod 3).
struct Eisenstein {
    std::int64_t a3;
    std::int64_t b3;
    std::uint64_t p;
    friend bool operator==(const Eisenstein&, const Eisenstein&) = default;
};

/// Cornacchia descent from a square root of -1. Throws WrongResidueClass when p = 3 (mod 4).
TwoSquare two_square(const PrimeContext& ctx);

/// Cornacchia descent from a square root of -3. Throws WrongResidueClass when p = 2 (mod 3).
Eisenstein eisenstein(const PrimeContext& ctx);

}  // namespace cubicvar
