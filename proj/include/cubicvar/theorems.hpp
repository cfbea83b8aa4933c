#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cubicvar/families.hpp"
#include "cubicvar/jacobsthal.hpp"
#include "cubicvar/rational.hpp"

namespace cubicvar {

enum class FormulaId {
    VaryConstant,
    VaryLinear,
    VaryQuadratic,
    Perturbed,
    TwistedSquare,
    DepressedConstant,      // y^2 = x^3 + b x + t
    LinearSixFour,          // y^2 = x^3 + 6 x^2 + t x + 4
    QuadraticConstantOnly,  // y^2 = x^3 + t x^2 + c
    QuadraticSixTwo,        // y^2 = x^3 + t x^2 + 6 x + 2
};

const char* to_string(FormulaId id) noexcept;

struct Residual {
    std::string name;
    std::int64_t value;
    friend bool operator==(const Residual&, const Residual&) = default;
};

/// A closed-form variance together with the integer sub-terms it was built from.
struct ClosedFormVariance {
    ExactRational value;
    std::vector<Residual> residuals;
    FormulaId formula;

    /// Throws std::out_of_range for an unknown name.
    std::int64_t residual(std::string_view name) const;
};

/// Rebuilds the value from the stored residuals alone.
ExactRational reassemble(const ClosedFormVariance& v, std::uint64_t p);

ClosedFormVariance variance_vary_constant(const PrimeContext& ctx, std::int64_t a, std::int64_t b);
ClosedFormVariance variance_vary_linear(const PrimeContext& ctx, std::int64_t a, std::int64_t c);
/// Throws BothZero when b = c = 0.
ClosedFormVariance variance_vary_quadratic(const PrimeContext& ctx, std::int64_t b,
                                           std::int64_t c);

/// A row of the perturbed-family table. Coefficients are rationals b_num/b_den, c_num/c_den.
struct PerturbedRow {
    const char* label;
    std::int64_t b_num, b_den;
    std::int64_t c_num, c_den;
    int group;  // rows sharing a group share the same table sum
};

std::span<const PerturbedRow> perturbed_table();
/// The involution (b, c) -> (b, -(b + c + 1)) on residues.
std::pair<std::uint64_t, std::uint64_t> perturbed_dual(const PrimeContext& ctx, std::uint64_t b,
                                                       std::uint64_t c);
/// Closed form for a tabulated row.
ClosedFormVariance variance_perturbed_row(const PrimeContext& ctx, std::size_t row);
/// Closed form when (b, c) matches a tabulated row mod p, nullopt otherwise.
std::optional<ClosedFormVariance> variance_perturbed(const PrimeContext& ctx, std::int64_t b,
                                                     std::int64_t c);

/// y^2 = x^3 + t^2 (b x + 1), b != 0.
ClosedFormVariance variance_twisted_square(const PrimeContext& ctx, std::int64_t b);
/// y^2 = x^3 + b x + t, b != 0.
ClosedFormVariance variance_depressed_constant(const PrimeContext& ctx, std::int64_t b);
/// y^2 = x^3 + 6 x^2 + t x + 4.
ClosedFormVariance variance_linear_six_four(const PrimeContext& ctx);
/// The four-branch form of variance_linear_six_four by p mod 12; the sign of
/// the A2 / B2 term is left open as two candidates.
ClosedFormValue linear_six_four_by_residue(const PrimeContext& ctx);
/// y^2 = x^3 + t x^2 + c, c != 0.
ClosedFormVariance variance_quadratic_constant_only(const PrimeContext& ctx, std::int64_t c);
/// y^2 = x^3 + t x^2 + 6 x + 2.
ClosedFormVariance variance_quadratic_six_two(const PrimeContext& ctx);

/// Closed form matching a family, when one is known.
std::optional<ClosedFormVariance> closed_form_for(const FamilySpec& spec);

}  // namespace cubicvar
