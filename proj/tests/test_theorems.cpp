#include <functional>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "cubicvar/stats.hpp"
#include "cubicvar/theorems.hpp"
#include "oracle.hpp"

using namespace cubicvar;

namespace {

ExactRational q(std::int64_t num, std::int64_t den) { return {BigInt(num), BigInt(den)}; }

oracle::Rational brute(std::int64_t p, const std::function<std::int64_t(std::int64_t, std::int64_t)>& f) {
    return oracle::variance(oracle::fibers(oracle::Chi(p), f));
}

oracle::Rational as_oracle(const ExactRational& r) { return oracle::Rational(r.num(), r.den()); }

std::vector<std::int64_t> primes_to(std::int64_t hi) { return oracle::small_primes(5, hi); }

}  // namespace

TEST(VaryConstant, Examples) {
    EXPECT_EQ(variance_vary_constant(make_context(7), 0, 0).value, ExactRational(12));
    EXPECT_EQ(variance_vary_constant(make_context(5), 0, 0).value, ExactRational(0));
    EXPECT_EQ(variance_vary_constant(make_context(5), 0, 1).value, ExactRational(6));
}

TEST(VaryLinear, Examples) {
    EXPECT_EQ(variance_vary_linear(make_context(5), 0, 0).value, ExactRational(8));
    EXPECT_EQ(variance_vary_linear(make_context(7), 1, 0).value, ExactRational(6));
    const auto v = variance_vary_linear(make_context(7), 0, 1);
    EXPECT_EQ(v.value, ExactRational(12));
    EXPECT_EQ(v.residual("n3"), 0);
    EXPECT_EQ(v.residual("char_sum"), 5);
}

TEST(VaryQuadratic, Examples) {
    EXPECT_EQ(variance_vary_quadratic(make_context(5), 1, 0).value, q(14, 5));
    const auto v = variance_vary_quadratic(make_context(7), 0, 1);
    EXPECT_EQ(v.value, q(48, 7));
    EXPECT_EQ(v.residual("n3"), 0);
    EXPECT_EQ(v.residual("char_sum"), 1);
    try {
        variance_vary_quadratic(make_context(7), 0, 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BothZero);
    }
}

TEST(Perturbed, Examples) {
    EXPECT_EQ(variance_perturbed(make_context(7), 0, 0)->value, q(34, 7));
    EXPECT_EQ(variance_perturbed(make_context(5), -1, 0)->value, q(14, 5));
    EXPECT_EQ(variance_perturbed(make_context(7), -3, 1)->value, q(20, 7));
    EXPECT_FALSE(variance_perturbed(make_context(7), 2, 2).has_value());
    // -1/2 = 3 mod 7
    EXPECT_EQ(variance_perturbed(make_context(7), 3, 3)->residual("row"), 7);
}

TEST(Perturbed, TableShape) {
    EXPECT_EQ(perturbed_table().size(), 11u);
    for (auto p : primes_to(311)) {
        auto ctx = make_context(static_cast<std::uint64_t>(p));
        std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
        for (const auto& r : perturbed_table()) {
            seen.emplace(ctx.fraction(r.b_num, r.b_den), ctx.fraction(r.c_num, r.c_den));
        }
        EXPECT_EQ(seen.size(), 11u) << "tabulated pairs collide mod " << p;
    }
}

TEST(Perturbed, DualPairsInTable) {
    const auto table = perturbed_table();
    for (auto p : primes_to(311)) {
        auto ctx = make_context(static_cast<std::uint64_t>(p));
        for (std::size_t i = 0; i + 1 < 8; i += 2) {
            const auto& a = table[i];
            const auto& b = table[i + 1];
            const auto dual = perturbed_dual(ctx, ctx.fraction(a.b_num, a.b_den), ctx.fraction(a.c_num, a.c_den));
            EXPECT_EQ(dual, std::make_pair(ctx.fraction(b.b_num, b.b_den), ctx.fraction(b.c_num, b.c_den)));
            EXPECT_EQ(variance_perturbed_row(ctx, i).value, variance_perturbed_row(ctx, i + 1).value);
        }
        for (std::size_t i = 8; i < 11; ++i) {
            const auto& r = table[i];
            const std::uint64_t b = ctx.fraction(r.b_num, r.b_den), c = ctx.fraction(r.c_num, r.c_den);
            EXPECT_EQ(perturbed_dual(ctx, b, c), std::make_pair(b, c)) << "row " << i << " is self-dual";
        }
    }
}

TEST(TwistedSquare, Examples) {
    EXPECT_EQ(variance_twisted_square(make_context(5), 1).value, q(6, 5));
    EXPECT_EQ(variance_twisted_square(make_context(7), 1).value, ExactRational(4));
    try {
        variance_twisted_square(make_context(7), 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroParameter);
    }
}

TEST(TwistedSquare, MeanDependsOnMinusB) {
    for (auto p : primes_to(61)) {
        auto ctx = make_context(static_cast<std::uint64_t>(p));
        oracle::Chi chi(p);
        for (std::int64_t b = 1; b < p; ++b) {
            const auto m = oracle::mean(oracle::fibers(chi, oracle::twisted_square(b)));
            ASSERT_EQ(m, oracle::Rational(1 + chi(-b))) << p << " " << b;
            ASSERT_EQ(variance_twisted_square(ctx, b).residual("mean"), 1 + chi(-b));
        }
    }
}

TEST(DepressedConstant, Examples) {
    EXPECT_EQ(variance_depressed_constant(make_context(5), 1).value, ExactRational(6));
    EXPECT_EQ(variance_depressed_constant(make_context(7), 1).value, ExactRational(4));
    EXPECT_EQ(variance_depressed_constant(make_context(5), 2).value, ExactRational(4));
    EXPECT_THROW(variance_depressed_constant(make_context(5), 5), Error);
}

TEST(LinearSixFour, Examples) {
    EXPECT_EQ(variance_linear_six_four(make_context(7)).value, ExactRational(6));
    EXPECT_EQ(variance_linear_six_four(make_context(11)).value, ExactRational(8));
    const auto v13 = variance_linear_six_four(make_context(13));
    EXPECT_EQ(v13.value, ExactRational(14));
    EXPECT_EQ(v13.residual("A2"), 3);
    EXPECT_EQ(v13.residual("sign"), 1);
    EXPECT_EQ(linear_six_four_by_residue(make_context(13)), ClosedFormValue::candidates(14, 2));
}

TEST(QuadraticConstantOnly, Examples) {
    EXPECT_EQ(variance_quadratic_constant_only(make_context(5), 1).value, q(14, 5));
    EXPECT_EQ(variance_quadratic_constant_only(make_context(7), 1).value, q(48, 7));
    const auto v = variance_quadratic_constant_only(make_context(7), 4);
    EXPECT_EQ(v.value, q(48, 7));
    EXPECT_EQ(v.residual("n3"), 3);
    EXPECT_EQ(v.residual("psi3_2c"), 4);
}

TEST(QuadraticSixTwo, Examples) {
    EXPECT_EQ(variance_quadratic_six_two(make_context(5)).value, q(14, 5));
    EXPECT_EQ(variance_quadratic_six_two(make_context(7)).value, q(62, 7));
}

TEST(ClosedForms, MatchBruteForceOnFullGrids) {
    for (auto p : primes_to(23)) {
        auto ctx = make_context(static_cast<std::uint64_t>(p));
        for (std::int64_t u = 0; u < p; ++u) {
            for (std::int64_t v = 0; v < p; ++v) {
                ASSERT_EQ(as_oracle(variance_vary_constant(ctx, u, v).value),
                          brute(p, oracle::vary_constant(u, v)));
                ASSERT_EQ(as_oracle(variance_vary_linear(ctx, u, v).value),
                          brute(p, oracle::vary_linear(u, v)));
                if (u != 0 || v != 0) {
                    ASSERT_EQ(as_oracle(variance_vary_quadratic(ctx, u, v).value),
                              brute(p, oracle::vary_quadratic(u, v)));
                }
                if (auto d = variance_perturbed(ctx, u, v)) {
                    ASSERT_EQ(as_oracle(d->value), brute(p, oracle::perturbed(u, v)));
                }
            }
            if (u != 0) {
                ASSERT_EQ(as_oracle(variance_twisted_square(ctx, u).value), brute(p, oracle::twisted_square(u)));
            }
        }
    }
}

TEST(ClosedForms, CaseSplitBoundary) {
    // a^2 = 3b branch and its neighbours
    for (auto p : primes_to(61)) {
        auto ctx = make_context(static_cast<std::uint64_t>(p));
        for (std::int64_t a = 0; a < p; ++a) {
            const std::int64_t b = static_cast<std::int64_t>(ctx.fraction(a * a % p, 3));
            for (std::int64_t db : {0, 1}) {
                const auto cf = variance_vary_constant(ctx, a, b + db);
                ASSERT_EQ(cf.residual("sigma_disc") == 0, db == 0);
                ASSERT_EQ(as_oracle(cf.value), brute(p, oracle::vary_constant(a, b + db)));
            }
        }
    }
}

TEST(ClosedForms, SpecialCasesAgreeWithGeneralForms) {
    for (auto p : primes_to(199)) {
        auto ctx = make_context(static_cast<std::uint64_t>(p));
        for (std::int64_t b = 1; b < p; ++b) {
            ASSERT_EQ(variance_depressed_constant(ctx, b).value, variance_vary_constant(ctx, 0, b).value);
            ASSERT_EQ(variance_quadratic_constant_only(ctx, b).value, variance_vary_quadratic(ctx, 0, b).value);
        }
        EXPECT_EQ(variance_quadratic_six_two(ctx).value, variance_vary_quadratic(ctx, 6, 2).value);
        EXPECT_EQ(variance_linear_six_four(ctx).value, variance_vary_linear(ctx, 6, 4).value);
        const auto six_two = variance_quadratic_six_two(ctx);
        EXPECT_EQ(six_two.residual("cubic_sum"), six_two.residual("sigma_m3") * six_two.residual("psi3_1"));
    }
}

TEST(ClosedForms, LegendreParityFacts) {
    for (auto p : primes_to(1000)) {
        auto ctx = make_context(static_cast<std::uint64_t>(p));
        EXPECT_EQ(ctx.chi(ctx.reduce(-1)) == 1, p % 4 == 1);
        EXPECT_EQ(ctx.chi(ctx.reduce(-3)) == 1, p % 3 == 1);
    }
}

TEST(ClosedForms, ReassembleFromResiduals) {
    std::mt19937_64 rng(17);
    for (auto p : primes_to(199)) {
        auto ctx = make_context(static_cast<std::uint64_t>(p));
        const auto up = static_cast<std::uint64_t>(p);
        std::vector<ClosedFormVariance> all;
        for (int i = 0; i < 4; ++i) {
            const auto u = static_cast<std::int64_t>(rng() % up), v = static_cast<std::int64_t>(1 + rng() % (up - 1));
            all.push_back(variance_vary_constant(ctx, u, v));
            all.push_back(variance_vary_linear(ctx, u, v));
            all.push_back(variance_vary_linear(ctx, u, 0));
            all.push_back(variance_vary_quadratic(ctx, u, v));
            all.push_back(variance_vary_quadratic(ctx, v, 0));
            all.push_back(variance_twisted_square(ctx, v));
            all.push_back(variance_depressed_constant(ctx, v));
            all.push_back(variance_quadratic_constant_only(ctx, v));
        }
        for (std::size_t r = 0; r < perturbed_table().size(); ++r) all.push_back(variance_perturbed_row(ctx, r));
        all.push_back(variance_linear_six_four(ctx));
        all.push_back(variance_quadratic_six_two(ctx));
        for (const auto& cf : all) ASSERT_EQ(reassemble(cf, up), cf.value) << to_string(cf.formula);
    }
}

TEST(ClosedForms, ClosedFormForDispatch) {
    auto ctx = make_context(7);
    EXPECT_EQ(closed_form_for(FamilySpec::vary_constant(ctx, 0, 0))->formula, FormulaId::VaryConstant);
    EXPECT_EQ(closed_form_for(FamilySpec::twisted_square(ctx, 1))->formula, FormulaId::TwistedSquare);
    EXPECT_FALSE(closed_form_for(FamilySpec::perturbed(ctx, 2, 2)).has_value());
}
