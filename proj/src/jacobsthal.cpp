#include "cubicvar/jacobsthal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cubicvar/decomp.hpp"

namespace cubicvar {

ClosedFormValue ClosedFormValue::candidates(std::int64_t first, std::int64_t second) {
    if (first == second) throw std::invalid_argument("candidate values must be distinct");
    return ClosedFormValue(Kind::TwoCandidates, std::max(first, second), std::min(first, second));
}

std::int64_t ClosedFormValue::value() const {
    if (kind_ != Kind::Exact) throw std::logic_error("closed form is sign-ambiguous");
    return hi_;
}

std::string ClosedFormValue::to_string() const {
    if (is_exact()) return std::to_string(hi_);
    return "{" + std::to_string(hi_) + ", " + std::to_string(lo_) + "}";
}

namespace {

void require_nonzero(const FpElem& c, const char* what) {
    if (c.is_zero()) throw Error(ErrorKind::ZeroParameter, std::string(what) + " needs c != 0");
}

// sum chi(x^3 + a x^2 + b x + c) with residues a, b, c
std::int64_t cubic_char_sum(const PrimeContext& ctx, std::uint64_t a, std::uint64_t b,
                            std::uint64_t c) {
    return char_sum(Poly(ctx, {c, b, a, 1}));
}

}  // namespace

std::int64_t phi2_brute(const FpElem& c) {
    require_nonzero(c, "phi2");
    return cubic_char_sum(c.context(), 0, c.value(), 0);
}

std::int64_t psi3_brute(const FpElem& c) {
    require_nonzero(c, "psi3");
    return cubic_char_sum(c.context(), 0, 0, c.value());
}

std::int64_t rho_brute(const FpElem& c) { return cubic_char_sum(c.context(), 1, c.value(), 0); }

bool is_cube(const FpElem& c) {
    require_nonzero(c, "is_cube");
    const auto& ctx = c.context();
    const std::uint64_t g = std::gcd<std::uint64_t>(3, ctx.p() - 1);
    return ctx.pow(c.value(), (ctx.p() - 1) / g) == 1;
}

ClosedFormValue phi2_closed(const FpElem& c) {
    require_nonzero(c, "phi2");
    const auto& ctx = c.context();
    if (ctx.mod4() == 3) return ClosedFormValue::exact(0);
    const TwoSquare d = two_square(ctx);
    if (auto s = sqrt_mod(c)) {
        return ClosedFormValue::exact(legendre(*s).v * 2 * d.a2);
    }
    return ClosedFormValue::candidates(2 * d.b2, -2 * d.b2);
}

ClosedFormValue psi3_closed(const FpElem& c) {
    require_nonzero(c, "psi3");
    const auto& ctx = c.context();
    if (ctx.mod3() == 2) return ClosedFormValue::exact(0);
    const Eisenstein d = eisenstein(ctx);
    const int sc = legendre(c).v;
    if (is_cube(c)) return ClosedFormValue::exact(sc * 2 * d.a3);
    return ClosedFormValue::candidates(sc * (-d.a3 + 3 * d.b3), sc * (-d.a3 - 3 * d.b3));
}

}  // namespace cubicvar
