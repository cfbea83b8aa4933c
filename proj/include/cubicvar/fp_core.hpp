#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "cubicvar/error.hpp"

namespace cubicvar {

/// Largest p for which a character table is built by default.
inline constexpr std::uint64_t kDefaultTableCap = std::uint64_t{1} << 20;

/// Moduli must stay below 2^32 so that products of two residues fit in 64 bits.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;

/// Primes at or below this bound use exhaustive search in sqrt_mod.
inline constexpr std::uint64_t kExhaustiveSqrtBound = 10000;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

namespace detail {
struct ContextData;
}

/// A validated odd prime p > 3. Cheap to copy; shares one read-only character table.
class PrimeContext {
public:
    std::uint64_t p() const noexcept;
    unsigned mod3() const noexcept;
    unsigned mod4() const noexcept;

    /// Canonical representative of an arbitrary integer.
    std::uint64_t reduce(std::int64_t v) const noexcept;
    /// num * den^{-1}; den must be nonzero mod p.
    std::uint64_t fraction(std::int64_t num, std::int64_t den) const;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t neg(std::uint64_t a) const noexcept;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
    std::uint64_t inv(std::uint64_t a) const;

    /// Quadratic character of a canonical residue; table lookup when available.
    int chi(std::uint64_t a) const noexcept;
    /// Quadratic character via Euler's criterion, regardless of table.
    int chi_euler(std::uint64_t a) const noexcept;

    bool has_table() const noexcept;
    /// Throws BudgetExceeded when p is above the table cap.
    std::span<const std::int8_t> table() const;

    bool operator==(const PrimeContext& other) const noexcept { return p() == other.p(); }

private:
    friend PrimeContext make_context(std::uint64_t, std::uint64_t);
    explicit PrimeContext(std::shared_ptr<const detail::ContextData> data) : data_(std::move(data)) {}
    std::shared_ptr<const detail::ContextData> data_;
};

/// Throws TooSmall for p <= 3, NotPrime for composites, BudgetExceeded for p >= 2^32.
PrimeContext make_context(std::uint64_t p, std::uint64_t table_cap = kDefaultTableCap);

/// Element of F_p carrying its field.
class FpElem {
public:
    FpElem(const PrimeContext& ctx, std::int64_t v) : ctx_(ctx), value_(ctx.reduce(v)) {}
    static FpElem from_residue(const PrimeContext& ctx, std::uint64_t r) { return FpElem(ctx, r, 0); }

    std::uint64_t value() const noexcept { return value_; }
    const PrimeContext& context() const noexcept { return ctx_; }
    bool is_zero() const noexcept { return value_ == 0; }

    friend bool operator==(const FpElem& a, const FpElem& b) noexcept {
        return a.ctx_ == b.ctx_ && a.value_ == b.value_;
    }

private:
    FpElem(const PrimeContext& ctx, std::uint64_t r, int) : ctx_(ctx), value_(r % ctx.p()) {}
    PrimeContext ctx_;
    std::uint64_t value_;
};

/// Value of the quadratic character: -1, 0 or 1.
struct CharValue {
    int v = 0;
    friend bool operator==(CharValue, CharValue) = default;
};

CharValue legendre(const FpElem& a);
/// table[a] = legendre(a); throws BudgetExceeded above the table cap.
std::span<const std::int8_t> legendre_table(const PrimeContext& ctx);

/// Polynomial over F_p, coefficients from the constant term upward.
class Poly {
public:
    Poly(const PrimeContext& ctx, std::vector<std::uint64_t> coeffs);
    /// Coefficients given as arbitrary integers, reduced mod p.
    static Poly from_ints(const PrimeContext& ctx, std::initializer_list<std::int64_t> coeffs);

    const PrimeContext& context() const noexcept { return ctx_; }
    std::span<const std::uint64_t> coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    std::uint64_t operator()(std::uint64_t x) const noexcept;

private:
    PrimeContext ctx_;
    std::vector<std::uint64_t> coeffs_;  // trailing zeros trimmed
};

FpElem poly_eval(const Poly& f, const FpElem& x);
/// Number of roots in F_p by enumeration; throws ZeroPolynomial.
std::uint64_t root_count(const Poly& f);
/// Sum over x in F_p of chi(f(x)).
std::int64_t char_sum(const Poly& f);

/// Smaller of the two square roots, or nullopt for non-squares.
std::optional<FpElem> sqrt_mod(const FpElem& a);
std::optional<std::uint64_t> sqrt_mod_exhaustive(const PrimeContext& ctx, std::uint64_t a);
std::optional<std::uint64_t> sqrt_mod_tonelli(const PrimeContext& ctx, std::uint64_t a);

}  // namespace cubicvar
