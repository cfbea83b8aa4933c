#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "cubicvar/fp_core.hpp"

namespace cubicvar {

/// Closed-form evaluation of a Jacobsthal sum. The sign of the non-square
/// (resp. non-cube) case is not determined by the decomposition, so it is
/// reported as a pair of candidates.
class ClosedFormValue {
public:
    enum class Kind { Exact, TwoCandidates };

    static ClosedFormValue exact(std::int64_t v) { return ClosedFormValue(Kind::Exact, v, v); }
    /// Throws std::invalid_argument when first == second.
    static ClosedFormValue candidates(std::int64_t first, std::int64_t second);

    Kind kind() const noexcept { return kind_; }
    bool is_exact() const noexcept { return kind_ == Kind::Exact; }
    std::int64_t value() const;  // Exact only
    /// Candidates ordered (larger, smaller); for Exact both entries equal the value.
    std::pair<std::int64_t, std::int64_t> candidates() const noexcept { return {hi_, lo_}; }

    bool contains(std::int64_t v) const noexcept { return v == hi_ || v == lo_; }
    std::string to_string() const;

    friend bool operator==(const ClosedFormValue&, const ClosedFormValue&) = default;

private:
    ClosedFormValue(Kind k, std::int64_t hi, std::int64_t lo) : kind_(k), hi_(hi), lo_(lo) {}
    Kind kind_;
    std::int64_t hi_;
    std::int64_t lo_;
};

// Direct summation over x = 0..p-1.

/// sum chi(x^3 + c x); throws ZeroParameter for c = 0.
std::int64_t phi2_brute(const FpElem& c);
/// sum chi(x^3 + c); throws ZeroParameter for c = 0.
std::int64_t psi3_brute(const FpElem& c);
/// sum chi(x^3 + x^2 + c x); c = 0 admitted.
std::int64_t rho_brute(const FpElem& c);

bool is_cube(const FpElem& c);

ClosedFormValue phi2_closed(const FpElem& c);
ClosedFormValue psi3_closed(const FpElem& c);

}  // namespace cubicvar
