#include "cubicvar/families.hpp"

#include <string>

namespace cubicvar {

char family_tag(FamilyKind kind) noexcept {
    switch (kind) {
        case FamilyKind::VaryConstant: return 'C';
        case FamilyKind::VaryLinear: return 'B';
        case FamilyKind::VaryQuadratic: return 'A';
        case FamilyKind::Perturbed: return 'D';
        case FamilyKind::TwistedSquare: return 'T';
    }
    return '?';
}

FamilyKind family_from_tag(char tag) {
    switch (tag) {
        case 'C': return FamilyKind::VaryConstant;
        case 'B': return FamilyKind::VaryLinear;
        case 'A': return FamilyKind::VaryQuadratic;
        case 'D': return FamilyKind::Perturbed;
        case 'T': return FamilyKind::TwistedSquare;
        default: break;
    }
    throw Error(ErrorKind::InvalidConfig, std::string("unknown family tag '") + tag + "'");
}

std::vector<std::string> family_param_names(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::VaryConstant: return {"a", "b"};
        case FamilyKind::VaryLinear: return {"a", "c"};
        case FamilyKind::VaryQuadratic:
        case FamilyKind::Perturbed: return {"b", "c"};
        case FamilyKind::TwistedSquare: return {"b"};
    }
    return {};
}

namespace {

Poly cubic(const PrimeContext& ctx, std::uint64_t x0, std::uint64_t x1, std::uint64_t x2,
           std::uint64_t x3) {
    return Poly(ctx, {x0, x1, x2, x3});
}

Poly make_base(const PrimeContext& ctx, FamilyKind kind, std::span<const std::uint64_t> q) {
    switch (kind) {
        case FamilyKind::VaryConstant: return cubic(ctx, 0, q[1], q[0], 1);
        case FamilyKind::VaryLinear: return cubic(ctx, q[1], 0, q[0], 1);
        case FamilyKind::VaryQuadratic:
        case FamilyKind::Perturbed: return cubic(ctx, q[1], q[0], 0, 1);
        case FamilyKind::TwistedSquare: return cubic(ctx, 0, 0, 0, 1);
    }
    return Poly(ctx, {});
}

Poly make_slope(const PrimeContext& ctx, FamilyKind kind, std::span<const std::uint64_t> q) {
    switch (kind) {
        case FamilyKind::VaryConstant: return Poly(ctx, {1});
        case FamilyKind::VaryLinear: return Poly(ctx, {0, 1});
        case FamilyKind::VaryQuadratic: return Poly(ctx, {0, 0, 1});
        case FamilyKind::Perturbed: return Poly(ctx, {0, ctx.neg(1), 1});
        case FamilyKind::TwistedSquare: return Poly(ctx, {1, q[0]});
    }
    return Poly(ctx, {});
}

}  // namespace

FamilySpec::FamilySpec(const PrimeContext& ctx, FamilyKind kind,
                       std::span<const std::uint64_t> params)
    : ctx_(ctx),
      kind_(kind),
      arity_(params.size()),
      base_(make_base(ctx, kind, params)),
      slope_(make_slope(ctx, kind, params)) {
    for (std::size_t i = 0; i < arity_; ++i) params_[i] = params[i];
}

FamilySpec FamilySpec::make(const PrimeContext& ctx, FamilyKind kind,
                            std::span<const std::uint64_t> params) {
    const std::size_t want = kind == FamilyKind::TwistedSquare ? 1 : 2;
    if (params.size() != want) {
        throw Error(ErrorKind::InvalidConfig, std::string("family ") + family_tag(kind) +
                                                  " takes " + std::to_string(want) + " parameters");
    }
    std::array<std::uint64_t, 2> q{};
    for (std::size_t i = 0; i < want; ++i) q[i] = params[i] % ctx.p();
    if (kind == FamilyKind::VaryQuadratic && q[0] == 0 && q[1] == 0) {
        throw Error(ErrorKind::BothZero, "b and c may not both be 0");
    }
    if (kind == FamilyKind::TwistedSquare && q[0] == 0) {
        throw Error(ErrorKind::ZeroParameter, "twisted family needs b != 0");
    }
    return FamilySpec(ctx, kind, std::span<const std::uint64_t>(q.data(), want));
}

FamilySpec FamilySpec::vary_constant(const PrimeContext& ctx, std::int64_t a, std::int64_t b) {
    const std::uint64_t q[] = {ctx.reduce(a), ctx.reduce(b)};
    return make(ctx, FamilyKind::VaryConstant, q);
}

FamilySpec FamilySpec::vary_linear(const PrimeContext& ctx, std::int64_t a, std::int64_t c) {
    const std::uint64_t q[] = {ctx.reduce(a), ctx.reduce(c)};
    return make(ctx, FamilyKind::VaryLinear, q);
}

FamilySpec FamilySpec::vary_quadratic(const PrimeContext& ctx, std::int64_t b, std::int64_t c) {
    const std::uint64_t q[] = {ctx.reduce(b), ctx.reduce(c)};
    return make(ctx, FamilyKind::VaryQuadratic, q);
}

FamilySpec FamilySpec::perturbed(const PrimeContext& ctx, std::int64_t b, std::int64_t c) {
    const std::uint64_t q[] = {ctx.reduce(b), ctx.reduce(c)};
    return make(ctx, FamilyKind::Perturbed, q);
}

FamilySpec FamilySpec::twisted_square(const PrimeContext& ctx, std::int64_t b) {
    const std::uint64_t q[] = {ctx.reduce(b)};
    return make(ctx, FamilyKind::TwistedSquare, q);
}

namespace {

std::uint64_t multiplier(const FamilySpec& spec, std::uint64_t t) {
    return spec.quadratic_in_parameter() ? spec.context().mul(t, t) : t;
}

Poly scaled_instance(const FamilySpec& spec, std::uint64_t d, std::uint64_t t) {
    const auto& ctx = spec.context();
    const std::uint64_t m = multiplier(spec, t);
    std::vector<std::uint64_t> coeffs(4, 0);
    auto base = spec.base().coeffs();
    auto slope = spec.slope().coeffs();
    for (std::size_t i = 0; i < base.size(); ++i) coeffs[i] = ctx.mul(d, base[i]);
    for (std::size_t i = 0; i < slope.size(); ++i) {
        coeffs[i] = ctx.add(coeffs[i], ctx.mul(d, ctx.mul(m, slope[i])));
    }
    return Poly(ctx, std::move(coeffs));
}

std::uint64_t count_points(const Poly& f, std::uint64_t d) {
    const auto& ctx = f.context();
    const std::uint64_t p = ctx.p();
    std::uint64_t n = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        const std::uint64_t fx = f(x);
        for (std::uint64_t y = 0; y < p; ++y) {
            if (ctx.mul(d, ctx.mul(y, y)) == fx) ++n;
        }
    }
    return n;
}

FiberSumVector build_vector(const FamilySpec& spec, std::uint64_t d) {
    const auto& ctx = spec.context();
    const std::uint64_t p = ctx.p();

    std::vector<std::uint64_t> base(p);
    std::vector<std::uint64_t> slope(p);
    for (std::uint64_t x = 0; x < p; ++x) {
        base[x] = ctx.mul(d, spec.base()(x));
        slope[x] = ctx.mul(d, spec.slope()(x));
    }

    std::vector<std::int64_t> out(p, 0);
    auto sum_row = [&](auto&& chi) {
        if (spec.quadratic_in_parameter()) {
            for (std::uint64_t t = 0; t < p; ++t) {
                const std::uint64_t m = ctx.mul(t, t);
                std::int64_t s = 0;
                for (std::uint64_t x = 0; x < p; ++x) s += chi((base[x] + m * slope[x]) % p);
                out[t] = s;
            }
            return;
        }
        // f_{t+1}(x) = f_t(x) + slope(x)
        std::vector<std::uint64_t> cur = base;
        for (std::uint64_t t = 0; t < p; ++t) {
            std::int64_t s = 0;
            for (std::uint64_t x = 0; x < p; ++x) {
                s += chi(cur[x]);
                cur[x] = ctx.add(cur[x], slope[x]);
            }
            out[t] = s;
        }
    };
    if (ctx.has_table()) {
        const auto table = ctx.table();
        sum_row([table](std::uint64_t v) { return static_cast<int>(table[v]); });
    } else {
        sum_row([&ctx](std::uint64_t v) { return ctx.chi_euler(v); });
    }
    return FiberSumVector{std::move(out), spec, p};
}

}  // namespace

Poly instantiate(const FamilySpec& spec, const FpElem& t) {
    return scaled_instance(spec, 1, t.value());
}

std::int64_t fiber_sum(const FamilySpec& spec, const FpElem& t) {
    return char_sum(instantiate(spec, t));
}

std::uint64_t point_count(const FamilySpec& spec, const FpElem& t) {
    return static_cast<std::uint64_t>(static_cast<std::int64_t>(spec.context().p()) +
                                      fiber_sum(spec, t));
}

std::uint64_t point_count_naive(const FamilySpec& spec, const FpElem& t) {
    return count_points(instantiate(spec, t), 1);
}

FiberSumVector fiber_sum_vector(const FamilySpec& spec) { return build_vector(spec, 1); }

std::int64_t fiber_sum_twisted(const FamilySpec& spec, const FpElem& d, const FpElem& t) {
    if (d.is_zero()) throw Error(ErrorKind::ZeroParameter, "twist needs d != 0");
    return char_sum(scaled_instance(spec, d.value(), t.value()));
}

std::uint64_t point_count_naive_twisted(const FamilySpec& spec, const FpElem& d,
                                        const FpElem& t) {
    if (d.is_zero()) throw Error(ErrorKind::ZeroParameter, "twist needs d != 0");
    return count_points(instantiate(spec, t), d.value());
}

FiberSumVector fiber_sum_vector_twisted(const FamilySpec& spec, const FpElem& d) {
    if (d.is_zero()) throw Error(ErrorKind::ZeroParameter, "twist needs d != 0");
    return build_vector(spec, d.value());
}

}  // namespace cubicvar
