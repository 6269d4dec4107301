#include <gtest/gtest.h>

#include <random>

#include "hyperjac/quadchar.hpp"

using namespace hyperjac;

namespace {

FqPoly P(std::uint32_t q, std::vector<Coeff> c) { return FqPoly(FieldCtx(q), std::move(c)); }

FqPoly random_poly(FieldCtx f, int deg, std::mt19937_64& gen) {
    std::vector<Coeff> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = static_cast<Coeff>(gen() % f.q());
    c.back() = 1;
    return FqPoly(f, c);
}

}  // namespace

TEST(Legendre, Examples) {
    EXPECT_EQ(legendre_symbol(P(3, {0, 1}), P(3, {1, 1})), -1);
    EXPECT_EQ(legendre_symbol(P(3, {0, 1}), P(3, {0, 1})), 0);
    EXPECT_EQ(legendre_symbol(P(3, {1, 1}), P(3, {0, 1})), 1);
}

TEST(Legendre, ReducibleModulusDetected) {
    // (X + 1)^4 mod (X - 1)(X + 1) is 1 at X = 1 and 0 at X = -1, so not constant.
    EXPECT_THROW(legendre_symbol(P(3, {1, 1}), P(3, {2, 0, 1})), std::domain_error);
}

TEST(Legendre, PrimePowers) {
    EXPECT_EQ(char_prime_power(P(3, {0, 1}), P(3, {1, 1}), 2), 1);
    EXPECT_EQ(char_prime_power(P(3, {0, 1}), P(3, {1, 1}), 3), -1);
    EXPECT_EQ(char_prime_power(P(3, {0, 0, 1}), P(3, {0, 1}), 1), 0);
}

TEST(Legendre, InfinitePlace) {
    const FieldCtx f(3);
    EXPECT_EQ(infinite_place_value(monic_from_index(f, 6, 0)), 1);
    EXPECT_EQ(infinite_place_value(monic_from_index(f, 7, 0)), 0);
    EXPECT_EQ(infinite_place_value(monic_from_index(f, 3, 0)), 0);
}

TEST(Legendre, Multiplicativity) {
    for (std::uint32_t q : {3u, 5u, 7u}) {
        const FieldCtx f(q);
        std::mt19937_64 gen(q);
        const auto primes = monic_irreducibles(f, 3);
        for (int trial = 0; trial < 1000; ++trial) {
            const FqPoly& p = primes[gen() % primes.size()];
            const FqPoly a = random_poly(f, 1 + static_cast<int>(gen() % 5), gen);
            const FqPoly b = random_poly(f, 1 + static_cast<int>(gen() % 5), gen);
            if ((a % p).is_zero() || (b % p).is_zero()) continue;
            EXPECT_EQ(legendre_symbol(a * b, p), legendre_symbol(a, p) * legendre_symbol(b, p));
        }
    }
}

TEST(Legendre, HalfOfNonzeroResiduesAreSquares) {
    for (std::uint32_t q : {3u, 5u}) {
        const FieldCtx f(q);
        for (const auto& p : monic_irreducibles(f, q == 3 ? 4 : 3)) {
            const ResidueRing r(p, false);
            std::uint64_t plus = 0;
            for (std::uint64_t i = 1; i < r.size(); ++i) plus += legendre_symbol(r.decode(i), p) == 1;
            EXPECT_EQ(plus, (r.size() - 1) / 2) << format_poly(p);
        }
    }
}

TEST(LambdaSum, Examples) {
    EXPECT_EQ(lambda_char_sum(P(3, {1, 2, 0, 1}), 1), 3);
    EXPECT_EQ(lambda_char_sum(P(3, {0, 2, 0, 1}), 1), 0);
}

TEST(SymbolCache, MatchesReferenceSymbols) {
    for (std::uint32_t q : {3u, 5u}) {
        const FieldCtx f(q);
        const SymbolTableCache cache(f, 4);
        std::mt19937_64 gen(7 * q);
        for (int trial = 0; trial < 50; ++trial) {
            const FqPoly F = random_poly(f, 3 + static_cast<int>(gen() % 6), gen);
            std::vector<std::int8_t> syms(cache.prime_count());
            cache.symbols(F, syms);
            for (std::size_t i = 0; i < cache.prime_count(); ++i) ASSERT_EQ(syms[i], legendre_symbol(F, cache.prime(i)));
            for (int n = 1; n <= 4; ++n) EXPECT_EQ(cache.lambda_char_sum(syms, n), lambda_char_sum(F, n));
        }
    }
}

TEST(SymbolCache, PowmodFallbackAgreesWithTables) {
    const FieldCtx f(3);
    const SymbolTableCache tables(f, 4);
    const SymbolTableCache no_tables(f, 4, 1);  // budget 1: Euler criterion everywhere
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 100; ++trial) {
        const FqPoly F = random_poly(f, 7, gen);
        for (std::size_t i = 0; i < tables.prime_count(); ++i) ASSERT_EQ(tables.symbol(F, i), no_tables.symbol(F, i));
    }
}

TEST(SymbolWalker, IncrementalResiduesMatchFullReduction) {
    for (std::uint32_t q : {3u, 5u}) {
        const FieldCtx f(q);
        const SymbolTableCache cache(f, 3);
        const int d = 5;
        SymbolWalker w(cache, d, cache.prime_count());
        std::vector<std::int8_t> inc(cache.prime_count()), ref(cache.prime_count());
        w.seek(17);
        for (std::uint64_t i = 17; i < monic_count(q, d); ++i) {
            if (i > 17) ASSERT_TRUE(w.next());
            ASSERT_EQ(w.index(), i);
            const FqPoly F = monic_from_index(f, d, i);
            ASSERT_EQ(w.poly(), F);
            w.symbols(inc);
            cache.symbols(F, ref);
            ASSERT_EQ(inc, ref) << format_poly(F);
        }
        EXPECT_FALSE(w.next());
    }
}
