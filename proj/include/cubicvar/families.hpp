#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cubicvar/fp_core.hpp"

namespace cubicvar {

enum class FamilyKind {
    VaryConstant,   // y^2 = x^3 + a x^2 + b x + t
    VaryLinear,     // y^2 = x^3 + a x^2 + t x + c
    VaryQuadratic,  // y^2 = x^3 + t x^2 + b x + c
    Perturbed,      // y^2 = x^3 + b x + c + t (x^2 - x)
    TwistedSquare,  // y^2 = x^3 + t^2 (b x + 1)
};

/// One-letter tag used by the CLI and reports: C, B, A, D, T.
char family_tag(FamilyKind kind) noexcept;
/// Throws InvalidConfig for an unknown tag.
FamilyKind family_from_tag(char tag);
/// Names of the fixed coefficients, in order ("a","b" for VaryConstant, ...).
std::vector<std::string> family_param_names(FamilyKind kind);

/// A one-parameter cubic family with its fixed coefficients reduced mod p.
class FamilySpec {
public:
    static FamilySpec vary_constant(const PrimeContext& ctx, std::int64_t a, std::int64_t b);
    static FamilySpec vary_linear(const PrimeContext& ctx, std::int64_t a, std::int64_t c);
    /// Throws BothZero when b = c = 0.
    static FamilySpec vary_quadratic(const PrimeContext& ctx, std::int64_t b, std::int64_t c);
    static FamilySpec perturbed(const PrimeContext& ctx, std::int64_t b, std::int64_t c);
    /// Throws ZeroParameter when b = 0.
    static FamilySpec twisted_square(const PrimeContext& ctx, std::int64_t b);
    /// Generic constructor from residues, validated as above; params.size() must match the kind.
    static FamilySpec make(const PrimeContext& ctx, FamilyKind kind,
                           std::span<const std::uint64_t> params);

    FamilyKind kind() const noexcept { return kind_; }
    const PrimeContext& context() const noexcept { return ctx_; }
    /// Fixed coefficients as canonical residues, in family_param_names order.
    std::span<const std::uint64_t> params() const noexcept { return {params_.data(), arity_}; }

    /// f_t(x) = base(x) + m(t) * slope(x), with m(t) = t, or t^2 for TwistedSquare.
    const Poly& base() const noexcept { return base_; }
    const Poly& slope() const noexcept { return slope_; }
    bool quadratic_in_parameter() const noexcept { return kind_ == FamilyKind::TwistedSquare; }

private:
    FamilySpec(const PrimeContext& ctx, FamilyKind kind, std::span<const std::uint64_t> params);

    PrimeContext ctx_;
    FamilyKind kind_;
    std::array<std::uint64_t, 2> params_{};
    std::size_t arity_ = 0;
    Poly base_;
    Poly slope_;
};

/// Fiber sums S_t for t = 0..p-1.
struct FiberSumVector {
    std::vector<std::int64_t> values;
    FamilySpec family;
    std::uint64_t p;
};

Poly instantiate(const FamilySpec& spec, const FpElem& t);

/// sum_x chi(f_t(x))
std::int64_t fiber_sum(const FamilySpec& spec, const FpElem& t);
/// p + fiber_sum
std::uint64_t point_count(const FamilySpec& spec, const FpElem& t);
/// #{(x, y) : y^2 = f_t(x)} by a double loop.
std::uint64_t point_count_naive(const FamilySpec& spec, const FpElem& t);

FiberSumVector fiber_sum_vector(const FamilySpec& spec);

// Twists d y^2 = f_t(x), d != 0. These evaluate chi(d f_t(x)) directly rather
// than scaling the untwisted sums.
std::int64_t fiber_sum_twisted(const FamilySpec& spec, const FpElem& d, const FpElem& t);
std::uint64_t point_count_naive_twisted(const FamilySpec& spec, const FpElem& d, const FpElem& t);
FiberSumVector fiber_sum_vector_twisted(const FamilySpec& spec, const FpElem& d);

}  // namespace cubicvar
