#pragma once

#include <cstdint>
#include <span>

#include "cubicvar/families.hpp"
#include "cubicvar/rational.hpp"

namespace cubicvar {

// Statistics of a vector indexed by lambda in F_p. Every function throws
// LengthMismatch unless values.size() == p.

/// (sum v) / p
ExactRational mean(std::span<const std::int64_t> values, std::uint64_t p);

/// E(v^2) - E(v)^2 = (p sum v^2 - (sum v)^2) / p^2
ExactRational variance(std::span<const std::int64_t> values, std::uint64_t p);

/// E((v - E(v))^2), summed term by term.
ExactRational variance_centered(std::span<const std::int64_t> values, std::uint64_t p);

inline ExactRational mean(const FiberSumVector& v) { return mean(v.values, v.p); }
inline ExactRational variance(const FiberSumVector& v) { return variance(v.values, v.p); }

}  // namespace cubicvar
