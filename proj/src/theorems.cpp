#include "cubicvar/theorems.hpp"

#include <array>
#include <stdexcept>

#include "cubicvar/decomp.hpp"

namespace cubicvar {

const char* to_string(FormulaId id) noexcept {
    switch (id) {
        case FormulaId::VaryConstant: return "vary_constant";
        case FormulaId::VaryLinear: return "vary_linear";
        case FormulaId::VaryQuadratic: return "vary_quadratic";
        case FormulaId::Perturbed: return "perturbed";
        case FormulaId::TwistedSquare: return "twisted_square";
        case FormulaId::DepressedConstant: return "depressed_constant";
        case FormulaId::LinearSixFour: return "linear_six_four";
        case FormulaId::QuadraticConstantOnly: return "quadratic_constant_only";
        case FormulaId::QuadraticSixTwo: return "quadratic_six_two";
    }
    return "unknown";
}

std::int64_t ClosedFormVariance::residual(std::string_view name) const {
    for (const auto& r : residuals) {
        if (r.name == name) return r.value;
    }
    throw std::out_of_range("no residual named " + std::string(name));
}

namespace {

using R = ExactRational;

int chi(const PrimeContext& ctx, std::int64_t v) { return ctx.chi(ctx.reduce(v)); }

std::int64_t signed_p(const PrimeContext& ctx) { return static_cast<std::int64_t>(ctx.p()); }

R inverse_p(std::uint64_t p) { return R(1) / R(static_cast<std::int64_t>(p)); }

std::int64_t cubic_sum(const PrimeContext& ctx, std::int64_t c0, std::int64_t c1,
                       std::int64_t c2, std::int64_t c3) {
    return char_sum(Poly(ctx, {ctx.reduce(c0), ctx.reduce(c1), ctx.reduce(c2), ctx.reduce(c3)}));
}

std::uint64_t cubic_roots(const PrimeContext& ctx, std::int64_t c0, std::int64_t c1,
                          std::int64_t c2) {
    return root_count(Poly(ctx, {ctx.reduce(c0), ctx.reduce(c1), ctx.reduce(c2), 1}));
}

std::int64_t phi2_at(const PrimeContext& ctx, std::int64_t c) {
    return phi2_brute(FpElem(ctx, c));
}

// Table sums, one per group, in terms of named residuals.
std::int64_t perturbed_sum(int group, std::int64_t sm1, std::int64_t s2, std::int64_t sm3,
                           std::int64_t phi1, std::int64_t n4, std::int64_t rho2) {
    switch (group) {
        case 0: return -1 - sm1;
        case 1: return -1 - sm1 + s2 * phi1;
        case 2: return -1 - s2 + phi1;
        case 3: return -1 - s2 + s2 * phi1;
        case 4: return 0;
        case 5: return -2 * (1 + sm1 + sm3);
        case 6: return -n4 - 2 * sm1 + sm1 * rho2 + s2 * phi1;
        default: break;
    }
    throw std::logic_error("bad perturbed table group");
}

constexpr std::array<PerturbedRow, 11> kPerturbedTable{{
    {"(0,0)", 0, 1, 0, 1, 0},
    {"(0,-1)", 0, 1, -1, 1, 0},
    {"(-2,0)", -2, 1, 0, 1, 1},
    {"(-2,1)", -2, 1, 1, 1, 1},
    {"(1,0)", 1, 1, 0, 1, 2},
    {"(1,-2)", 1, 1, -2, 1, 2},
    {"(-1/2,0)", -1, 2, 0, 1, 3},
    {"(-1/2,-1/2)", -1, 2, -1, 2, 3},
    {"(-1,0)", -1, 1, 0, 1, 4},
    {"(-3,1)", -3, 1, 1, 1, 5},
    {"(1,-1)", 1, 1, -1, 1, 6},
}};

}  // namespace

ClosedFormVariance variance_vary_constant(const PrimeContext& ctx, std::int64_t a, std::int64_t b) {
    const std::int64_t p = signed_p(ctx);
    const std::uint64_t ra = ctx.reduce(a);
    const std::uint64_t disc = ctx.sub(ctx.mul(ra, ra), ctx.mul(3, ctx.reduce(b)));
    const int sm3 = chi(ctx, -3);
    const int sd = ctx.chi(disc);
    ClosedFormVariance out{0, {{"sigma_m3", sm3}, {"sigma_disc", sd}}, FormulaId::VaryConstant};
    out.value = disc != 0 ? R(p - 1 - sm3 - sd) : R((1 + sm3) * (p - 1));
    return out;
}

ClosedFormVariance variance_vary_linear(const PrimeContext& ctx, std::int64_t a, std::int64_t c) {
    const std::int64_t p = signed_p(ctx);
    const int sm1 = chi(ctx, -1);
    ClosedFormVariance out{0, {}, FormulaId::VaryLinear};
    if (ctx.reduce(c) == 0) {
        if (ctx.reduce(a) == 0) {
            out.residuals = {{"case", 0}, {"sigma_m1", sm1}};
            out.value = R((1 + sm1) * (p - 1));
        } else {
            out.residuals = {{"case", 1}, {"sigma_m1", sm1}};
            out.value = R(p - 2 - sm1);
        }
        return out;
    }
    const auto rc = static_cast<std::int64_t>(ctx.reduce(c));
    const auto n3 = static_cast<std::int64_t>(cubic_roots(ctx, -4 * rc, 0, a));
    const int sc = chi(ctx, rc);
    const std::int64_t rest = cubic_sum(ctx, -4 * rc, 0, a, 1);
    out.residuals = {{"case", 2}, {"sigma_m1", sm1}, {"n3", n3}, {"sigma_c", sc}, {"char_sum", rest}};
    out.value = R(p - 1 - sm1 - n3 + sc * rest);
    return out;
}

ClosedFormVariance variance_vary_quadratic(const PrimeContext& ctx, std::int64_t b,
                                           std::int64_t c) {
    const std::uint64_t rb = ctx.reduce(b);
    const std::uint64_t rc = ctx.reduce(c);
    if (rb == 0 && rc == 0) throw Error(ErrorKind::BothZero, "b and c may not both be 0");
    const std::int64_t p = signed_p(ctx);
    ClosedFormVariance out{0, {}, FormulaId::VaryQuadratic};
    if (rc == 0) {
        const int sb = ctx.chi(rb);
        out.residuals = {{"case", 0}, {"sigma_b", sb}};
        out.value = R(p - 1 - sb) - inverse_p(ctx.p());
        return out;
    }
    const auto n3 = static_cast<std::int64_t>(
        cubic_roots(ctx, -2 * static_cast<std::int64_t>(rc), -static_cast<std::int64_t>(rb), 0));
    // 4c x^3 + (b x + c)^2 = 4c x^3 + b^2 x^2 + 2bc x + c^2
    const std::int64_t rest =
        char_sum(Poly(ctx, {ctx.mul(rc, rc), ctx.mul(2, ctx.mul(rb, rc)), ctx.mul(rb, rb),
                            ctx.mul(4, rc)}));
    out.residuals = {{"case", 1}, {"n3", n3}, {"char_sum", rest}};
    out.value = R(p - 1 - n3 + rest) - inverse_p(ctx.p());
    return out;
}

std::span<const PerturbedRow> perturbed_table() { return kPerturbedTable; }

std::pair<std::uint64_t, std::uint64_t> perturbed_dual(const PrimeContext& ctx, std::uint64_t b,
                                                       std::uint64_t c) {
    return {b % ctx.p(), ctx.neg(ctx.add(ctx.add(b % ctx.p(), c % ctx.p()), 1))};
}

ClosedFormVariance variance_perturbed_row(const PrimeContext& ctx, std::size_t row) {
    const PerturbedRow& r = kPerturbedTable.at(row);
    const std::int64_t p = signed_p(ctx);
    const std::int64_t sm1 = chi(ctx, -1);
    const std::int64_t s2 = chi(ctx, 2);
    const std::int64_t sm3 = chi(ctx, -3);
    const std::int64_t phi1 = phi2_at(ctx, 1);
    std::int64_t n4 = 0;
    std::int64_t rho2 = 0;
    if (r.group == 6) {
        n4 = static_cast<std::int64_t>(root_count(Poly::from_ints(ctx, {1, -2, 1, -2, 1})));
        rho2 = rho_brute(FpElem(ctx, 2));
    }
    const std::int64_t sum = perturbed_sum(r.group, sm1, s2, sm3, phi1, n4, rho2);
    ClosedFormVariance out{R(p - 2 + sum) - inverse_p(ctx.p()),
                           {{"row", static_cast<std::int64_t>(row)},
                            {"sigma_m1", sm1},
                            {"sigma_2", s2},
                            {"sigma_m3", sm3},
                            {"phi2_1", phi1},
                            {"n4", n4},
                            {"rho_2", rho2},
                            {"table_sum", sum}},
                           FormulaId::Perturbed};
    return out;
}

std::optional<ClosedFormVariance> variance_perturbed(const PrimeContext& ctx, std::int64_t b,
                                                     std::int64_t c) {
    const std::uint64_t rb = ctx.reduce(b);
    const std::uint64_t rc = ctx.reduce(c);
    for (std::size_t i = 0; i < kPerturbedTable.size(); ++i) {
        const auto& r = kPerturbedTable[i];
        if (ctx.fraction(r.b_num, r.b_den) == rb && ctx.fraction(r.c_num, r.c_den) == rc) {
            return variance_perturbed_row(ctx, i);
        }
    }
    return std::nullopt;
}

ClosedFormVariance variance_twisted_square(const PrimeContext& ctx, std::int64_t b) {
    if (ctx.reduce(b) == 0) throw Error(ErrorKind::ZeroParameter, "twisted family needs b != 0");
    const std::int64_t p = signed_p(ctx);
    const std::int64_t rb = static_cast<std::int64_t>(ctx.reduce(b));
    const std::int64_t sm3 = chi(ctx, -3);
    const std::int64_t sm3b = ctx.chi(ctx.mul(ctx.reduce(-3), ctx.reduce(rb)));
    const std::int64_t smb = ctx.chi(ctx.neg(ctx.reduce(rb)));
    const std::int64_t phi = phi2_at(ctx, rb);
    const std::int64_t m = 1 + smb;
    ClosedFormVariance out{
        R(p - 1 - sm3 - sm3b - m * m) - R(phi * phi) / R(p),
        {{"sigma_m3", sm3}, {"sigma_m3b", sm3b}, {"sigma_mb", smb}, {"phi2_b", phi}, {"mean", m}},
        FormulaId::TwistedSquare};
    return out;
}

ClosedFormVariance variance_depressed_constant(const PrimeContext& ctx, std::int64_t b) {
    if (ctx.reduce(b) == 0) throw Error(ErrorKind::ZeroParameter, "needs b != 0");
    const std::int64_t p = signed_p(ctx);
    const std::int64_t sm3 = chi(ctx, -3);
    const std::int64_t sm3b = ctx.chi(ctx.mul(ctx.reduce(-3), ctx.reduce(b)));
    return {R(p - 1 - sm3 - sm3b), {{"sigma_m3", sm3}, {"sigma_m3b", sm3b}},
            FormulaId::DepressedConstant};
}

ClosedFormVariance variance_linear_six_four(const PrimeContext& ctx) {
    const std::int64_t p = signed_p(ctx);
    const std::int64_t sm1 = chi(ctx, -1);
    const std::int64_t s3 = chi(ctx, 3);
    const std::int64_t phi = phi2_at(ctx, -12);
    const auto mod12 = static_cast<std::int64_t>(ctx.p() % 12);
    ClosedFormVariance out{R(p - 3 - sm1 - s3 + phi),
                           {{"sigma_m1", sm1}, {"sigma_3", s3}, {"phi2_m12", phi}, {"p_mod_12", mod12}},
                           FormulaId::LinearSixFour};
    // record which sign the enumeration picked in the A2 / B2 branch
    if (mod12 == 1) {
        const std::int64_t a2 = two_square(ctx).a2;
        out.residuals.push_back({"A2", a2});
        out.residuals.push_back({"sign", phi / (2 * a2)});
    } else if (mod12 == 5) {
        const std::int64_t b2 = two_square(ctx).b2;
        out.residuals.push_back({"B2", b2});
        out.residuals.push_back({"sign", phi / (2 * b2)});
    }
    return out;
}

ClosedFormValue linear_six_four_by_residue(const PrimeContext& ctx) {
    const std::int64_t p = signed_p(ctx);
    switch (ctx.p() % 12) {
        case 1: {
            const std::int64_t a2 = two_square(ctx).a2;
            return ClosedFormValue::candidates(p - 5 + 2 * a2, p - 5 - 2 * a2);
        }
        case 5: {
            const std::int64_t b2 = two_square(ctx).b2;
            return ClosedFormValue::candidates(p - 3 + 2 * b2, p - 3 - 2 * b2);
        }
        case 7: return ClosedFormValue::exact(p - 1);
        default: return ClosedFormValue::exact(p - 3);
    }
}

ClosedFormVariance variance_quadratic_constant_only(const PrimeContext& ctx, std::int64_t c) {
    if (ctx.reduce(c) == 0) throw Error(ErrorKind::ZeroParameter, "needs c != 0");
    const std::int64_t p = signed_p(ctx);
    const std::uint64_t two_c = ctx.mul(2, ctx.reduce(c));
    const auto n3 = static_cast<std::int64_t>(
        cubic_roots(ctx, -static_cast<std::int64_t>(two_c), 0, 0));
    const std::int64_t s = ctx.chi(two_c);
    const std::int64_t psi = psi3_brute(FpElem::from_residue(ctx, two_c));
    return {R(p - 1 - n3 + s * psi) - inverse_p(ctx.p()),
            {{"n3", n3}, {"sigma_2c", s}, {"psi3_2c", psi}},
            FormulaId::QuadraticConstantOnly};
}

ClosedFormVariance variance_quadratic_six_two(const PrimeContext& ctx) {
    const std::int64_t p = signed_p(ctx);
    const std::int64_t s3 = chi(ctx, 3);
    const std::int64_t sm3 = chi(ctx, -3);
    const std::int64_t psi1 = psi3_brute(FpElem(ctx, 1));
    const std::int64_t direct = cubic_sum(ctx, 0, -3, 6, 1);
    return {R(p - 3 - s3 + sm3 * psi1) - inverse_p(ctx.p()),
            {{"sigma_3", s3}, {"sigma_m3", sm3}, {"psi3_1", psi1}, {"cubic_sum", direct}},
            FormulaId::QuadraticSixTwo};
}

ExactRational reassemble(const ClosedFormVariance& v, std::uint64_t p) {
    const auto P = static_cast<std::int64_t>(p);
    auto get = [&v](std::string_view name) { return v.residual(name); };
    const R inv = inverse_p(p);
    switch (v.formula) {
        case FormulaId::VaryConstant:
            if (get("sigma_disc") == 0) return R((1 + get("sigma_m3")) * (P - 1));
            return R(P - 1 - get("sigma_m3") - get("sigma_disc"));
        case FormulaId::VaryLinear:
            switch (get("case")) {
                case 0: return R((1 + get("sigma_m1")) * (P - 1));
                case 1: return R(P - 2 - get("sigma_m1"));
                default:
                    return R(P - 1 - get("sigma_m1") - get("n3") + get("sigma_c") * get("char_sum"));
            }
        case FormulaId::VaryQuadratic:
            if (get("case") == 0) return R(P - 1 - get("sigma_b")) - inv;
            return R(P - 1 - get("n3") + get("char_sum")) - inv;
        case FormulaId::Perturbed: {
            const int group = kPerturbedTable.at(static_cast<std::size_t>(get("row"))).group;
            const std::int64_t sum = perturbed_sum(group, get("sigma_m1"), get("sigma_2"),
                                                   get("sigma_m3"), get("phi2_1"), get("n4"),
                                                   get("rho_2"));
            return R(P - 2 + sum) - inv;
        }
        case FormulaId::TwistedSquare: {
            const std::int64_t m = 1 + get("sigma_mb");
            const std::int64_t phi = get("phi2_b");
            return R(P - 1 - get("sigma_m3") - get("sigma_m3b") - m * m) - R(phi * phi) * inv;
        }
        case FormulaId::DepressedConstant:
            return R(P - 1 - get("sigma_m3") - get("sigma_m3b"));
        case FormulaId::LinearSixFour:
            return R(P - 3 - get("sigma_m1") - get("sigma_3") + get("phi2_m12"));
        case FormulaId::QuadraticConstantOnly:
            return R(P - 1 - get("n3") + get("sigma_2c") * get("psi3_2c")) - inv;
        case FormulaId::QuadraticSixTwo:
            return R(P - 3 - get("sigma_3") + get("sigma_m3") * get("psi3_1")) - inv;
    }
    throw std::logic_error("unknown formula id");
}

std::optional<ClosedFormVariance> closed_form_for(const FamilySpec& spec) {
    const auto& ctx = spec.context();
    auto q = spec.params();
    auto s = [&](std::size_t i) { return static_cast<std::int64_t>(q[i]); };
    switch (spec.kind()) {
        case FamilyKind::VaryConstant: return variance_vary_constant(ctx, s(0), s(1));
        case FamilyKind::VaryLinear: return variance_vary_linear(ctx, s(0), s(1));
        case FamilyKind::VaryQuadratic: return variance_vary_quadratic(ctx, s(0), s(1));
        case FamilyKind::Perturbed: return variance_perturbed(ctx, s(0), s(1));
        case FamilyKind::TwistedSquare: return variance_twisted_square(ctx, s(0));
    }
    return std::nullopt;
}

}  // namespace cubicvar
