#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "cubicvar/fp_core.hpp"
#include "oracle.hpp"

using namespace cubicvar;

namespace {

const std::vector<std::int64_t>& primes_to(std::int64_t hi) {
    static const auto all = oracle::small_primes(5, 2000);
    static std::map<std::int64_t, std::vector<std::int64_t>> cache;
    auto& v = cache[hi];
    if (v.empty()) {
        for (auto p : all) {
            if (p <= hi) v.push_back(p);
        }
    }
    return v;
}

}  // namespace

TEST(MakeContext, Residues) {
    auto ctx = make_context(7);
    EXPECT_EQ(ctx.p(), 7u);
    EXPECT_EQ(ctx.mod4(), 3u);
    EXPECT_EQ(ctx.mod3(), 1u);
}

TEST(MakeContext, Rejections) {
    auto kind_of = [](std::uint64_t p) {
        try {
            make_context(p);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::IoError;  // sentinel: no throw
    };
    EXPECT_EQ(kind_of(4), ErrorKind::NotPrime);
    EXPECT_EQ(kind_of(3), ErrorKind::TooSmall);
    EXPECT_EQ(kind_of(2), ErrorKind::TooSmall);
    EXPECT_EQ(kind_of(0), ErrorKind::TooSmall);
    EXPECT_EQ(kind_of(561), ErrorKind::NotPrime);  // Carmichael
    EXPECT_EQ(kind_of(4294967311ull), ErrorKind::BudgetExceeded);
}

TEST(IsPrime, AgreesWithTrialDivision) {
    const auto primes = oracle::small_primes(0, 20000);
    std::set<std::int64_t> set(primes.begin(), primes.end());
    for (std::uint64_t n = 0; n <= 20000; ++n) {
        ASSERT_EQ(is_prime(n), set.count(static_cast<std::int64_t>(n)) == 1) << n;
    }
}

TEST(IsPrime, LargeKnownValues) {
    EXPECT_TRUE(is_prime(4294967291ull));           // largest 32-bit prime
    EXPECT_TRUE(is_prime(18446744073709551557ull));  // largest 64-bit prime
    EXPECT_FALSE(is_prime(3215031751ull));           // strong pseudoprime to 2,3,5,7
    EXPECT_FALSE(is_prime(3825123056546413051ull));  // strong pseudoprime to bases up to 23
}

TEST(Legendre, Examples) {
    auto ctx = make_context(7);
    EXPECT_EQ(legendre(FpElem(ctx, 0)).v, 0);
    EXPECT_EQ(legendre(FpElem(ctx, 2)).v, 1);
    EXPECT_EQ(legendre(FpElem(ctx, 3)).v, -1);
    EXPECT_EQ(legendre(FpElem(ctx, -5)).v, 1);  // -5 = 2
}

TEST(Legendre, Table) {
    auto t5 = legendre_table(make_context(5));
    EXPECT_EQ(std::vector<std::int8_t>(t5.begin(), t5.end()),
              (std::vector<std::int8_t>{0, 1, -1, -1, 1}));
    auto t7 = legendre_table(make_context(7));
    EXPECT_EQ(std::vector<std::int8_t>(t7.begin(), t7.end()),
              (std::vector<std::int8_t>{0, 1, 1, -1, 1, -1, -1}));
}

TEST(Legendre, TableBudget) {
    auto ctx = make_context(101, 100);
    EXPECT_FALSE(ctx.has_table());
    try {
        legendre_table(ctx);
        FAIL() << "expected BudgetExceeded";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
    }
    // Euler fallback still answers
    EXPECT_EQ(ctx.chi(4), 1);
    EXPECT_EQ(ctx.chi(2), ctx.chi_euler(2));
}

TEST(Legendre, EulerTableAndSquareSetAgree) {
    for (auto p : primes_to(1000)) {
        auto ctx = make_context(static_cast<std::uint64_t>(p));
        oracle::Chi chi(p);
        auto table = legendre_table(ctx);
        for (std::int64_t a = 0; a < p; ++a) {
            const auto ua = static_cast<std::uint64_t>(a);
            ASSERT_EQ(table[ua], chi(a)) << p << " " << a;
            ASSERT_EQ(ctx.chi_euler(ua), chi(a)) << p << " " << a;
        }
    }
}

TEST(Legendre, Multiplicative) {
    for (auto p : primes_to(61)) {
        auto ctx = make_context(static_cast<std::uint64_t>(p));
        for (std::uint64_t a = 0; a < ctx.p(); ++a) {
            for (std::uint64_t b = 0; b < ctx.p(); ++b) {
                ASSERT_EQ(ctx.chi(ctx.mul(a, b)), ctx.chi(a) * ctx.chi(b));
            }
        }
    }
    std::mt19937_64 rng(7);
    for (auto p : primes_to(2000)) {
        if (p <= 61) continue;
        auto ctx = make_context(static_cast<std::uint64_t>(p));
        for (int i = 0; i < 200; ++i) {
            const std::uint64_t a = rng() % ctx.p(), b = rng() % ctx.p();
            ASSERT_EQ(ctx.chi(ctx.mul(a, b)), ctx.chi(a) * ctx.chi(b));
        }
    }
}

TEST(CharacterSums, SumOfCharacterVanishes) {
    for (auto p : primes_to(1000)) {
        auto ctx = make_context(static_cast<std::uint64_t>(p));
        EXPECT_EQ(char_sum(Poly(ctx, {0, 1})), 0) << p;
    }
}

TEST(CharacterSums, ShiftedSquares) {
    for (auto p : primes_to(199)) {
        auto ctx = make_context(static_cast<std::uint64_t>(p));
        for (std::uint64_t c = 0; c < ctx.p(); ++c) {
            const std::int64_t expected = (c == 0 ? p : 0) - 1;
            ASSERT_EQ(char_sum(Poly(ctx, {c, 0, 1})), expected) << p << " " << c;
        }
    }
}

TEST(CharacterSums, ProductOfShifts) {
    for (auto p : primes_to(31)) {
        auto ctx = make_context(static_cast<std::uint64_t>(p));
        for (std::uint64_t c = 0; c < ctx.p(); ++c) {
            for (std::uint64_t d = 0; d < ctx.p(); ++d) {
                std::int64_t s = 0;
                for (std::uint64_t x = 0; x < ctx.p(); ++x) {
                    s += ctx.chi(ctx.add(x, c)) * ctx.chi(ctx.add(x, d));
                }
                ASSERT_EQ(s, (c == d ? p : 0) - 1);
            }
        }
    }
}

TEST(CharacterSums, QuadraticSolutionCount) {
    for (auto p : primes_to(31)) {
        auto ctx = make_context(static_cast<std::uint64_t>(p));
        for (std::uint64_t a = 1; a < ctx.p(); ++a) {
            for (std::uint64_t b = 0; b < ctx.p(); ++b) {
                for (std::uint64_t c = 0; c < ctx.p(); ++c) {
                    const auto n = static_cast<std::int64_t>(root_count(Poly(ctx, {c, b, a})));
                    const std::uint64_t disc = ctx.sub(ctx.mul(b, b), ctx.mul(4, ctx.mul(a, c)));
                    ASSERT_EQ(n, 1 + ctx.chi(disc));
                }
            }
        }
    }
}

TEST(PolyEval, Examples) {
    auto c5 = make_context(5);
    EXPECT_EQ(poly_eval(Poly::from_ints(c5, {0, 1, 0, 1}), FpElem(c5, 2)).value(), 0u);
    EXPECT_EQ(poly_eval(Poly::from_ints(c5, {3}), FpElem(c5, 4)).value(), 3u);
    auto c101 = make_context(101);
    EXPECT_EQ(poly_eval(Poly::from_ints(c101, {-16, 0, 6, 1}), FpElem(c101, -2)).value(), 0u);
}

TEST(PolyEval, TrimsAndReduces) {
    auto ctx = make_context(7);
    Poly f = Poly::from_ints(ctx, {1, 7, 14});
    EXPECT_EQ(f.degree(), 0);
    EXPECT_TRUE(Poly::from_ints(ctx, {0, 7}).is_zero());
}

TEST(RootCount, Examples) {
    auto ctx = make_context(7);
    EXPECT_EQ(root_count(Poly::from_ints(ctx, {-1, 0, 0, 1})), 3u);
    EXPECT_EQ(root_count(Poly::from_ints(ctx, {-2, 0, 0, 1})), 0u);
    for (std::uint64_t p : {5u, 11u, 101u}) {
        auto c = make_context(p);
        EXPECT_EQ(root_count(Poly::from_ints(c, {0, 0, 0, 1})), 1u);
    }
    try {
        root_count(Poly(ctx, {}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroPolynomial);
    }
}

TEST(SqrtMod, Examples) {
    auto ctx = make_context(7);
    EXPECT_EQ(sqrt_mod(FpElem(ctx, 2))->value(), 3u);
    EXPECT_EQ(sqrt_mod(FpElem(ctx, 0))->value(), 0u);
    EXPECT_FALSE(sqrt_mod(FpElem(ctx, 3)).has_value());
}

TEST(SqrtMod, TonelliMatchesExhaustive) {
    for (auto p : primes_to(2000)) {
        auto ctx = make_context(static_cast<std::uint64_t>(p));
        for (std::uint64_t a = 0; a < ctx.p(); ++a) {
            ASSERT_EQ(sqrt_mod_tonelli(ctx, a), sqrt_mod_exhaustive(ctx, a)) << p << " " << a;
        }
    }
}

TEST(SqrtMod, LargePrimeUsesCanonicalRoot) {
    for (std::uint64_t p : {10007u, 65537u, 999983u, 1048573u}) {
        auto ctx = make_context(p);
        std::mt19937_64 rng(p);
        for (int i = 0; i < 200; ++i) {
            const std::uint64_t a = rng() % p;
            auto r = sqrt_mod(FpElem::from_residue(ctx, a));
            ASSERT_EQ(r.has_value(), ctx.chi_euler(a) >= 0);
            if (r) {
                EXPECT_EQ(ctx.mul(r->value(), r->value()), a);
                EXPECT_LE(r->value(), p - r->value());
            }
        }
    }
}
