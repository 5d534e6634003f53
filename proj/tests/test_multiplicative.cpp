#include <doctest.h>

#include <numeric>
#include <random>

#include "dpsi/errors.hpp"
#include "dpsi/multiplicative.hpp"
#include "oracles.hpp"

using namespace dpsi;

namespace {

const PrimeTable& primes() {
    static const PrimeTable table(1000000);
    return table;
}

Factorization fz(std::uint64_t n) { return factorize(n, primes()); }

ExactRatio q(long num, long den) { return ExactRatio(mpz_class(num), mpz_class(den)); }

}  // namespace

TEST_CASE("factorize") {
    CHECK(fz(360).factors == std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}});
    CHECK(fz(1).factors.empty());
    CHECK(fz(104729).factors == std::vector<PrimePower>{{104729, 1}});
    CHECK_THROWS_AS(fz(0), DomainError);

    // Agrees with trial division, and the product reassembles n.
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        const auto f = fz(n);
        const auto ref = oracle::trial_factor(n);
        REQUIRE(f.factors.size() == ref.size());
        std::uint64_t prod = 1;
        for (std::size_t i = 0; i < ref.size(); ++i) {
            REQUIRE(f.factors[i].prime == ref[i].first);
            REQUIRE(f.factors[i].exponent == ref[i].second);
            for (unsigned e = 0; e < f.factors[i].exponent; ++e) prod *= f.factors[i].prime;
        }
        REQUIRE(prod == n);
    }
}

TEST_CASE("factorize reports a table too small to certify the cofactor") {
    const PrimeTable tiny(10);
    CHECK(factorize(97, tiny).factors == std::vector<PrimePower>{{97, 1}});  // 97 < 11^2
    CHECK_THROWS_AS(factorize(143, tiny), CoverageError);                   // 11 * 13
    CHECK_THROWS_AS(factorize(10007, tiny), CoverageError);                  // prime, but unprovable
}

TEST_CASE("SmallestFactorSieve agrees with table factorization") {
    const SmallestFactorSieve sieve(100000);
    for (std::uint32_t n = 1; n <= 100000; n += 7) REQUIRE(sieve.factorize(n).factors == fz(n).factors);
    CHECK_THROWS_AS(sieve.factorize(100001), CoverageError);
}

TEST_CASE("sigma") {
    CHECK(sigma(fz(6)) == ExactRatio(12));
    CHECK(sigma(fz(1)) == ExactRatio(1));
    CHECK(sigma(fz(5040)) == ExactRatio(19344));
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        const auto s = sigma(fz(n));
        REQUIRE(s.is_integer());
        REQUIRE(s == ExactRatio(static_cast<long>(oracle::divisor_sum(n))));
    }
}

TEST_CASE("psi_t") {
    CHECK(psi_t(fz(10), 2) == ExactRatio(18));
    CHECK(psi_t(fz(4), 3) == ExactRatio(7));
    CHECK(psi_t(fz(2), 3) == q(7, 2));
    CHECK(psi_t(fz(2), 3).str() == "7/2");
    CHECK_THROWS_AS(psi_t(fz(2), 1), DomainError);

    for (std::uint64_t n = 1; n <= 3000; n += 3)
        for (int t = 2; t <= 8; ++t) REQUIRE(psi_t(fz(n), t).raw() == oracle::psi(n, t));
}

TEST_CASE("is_t_free") {
    CHECK_FALSE(is_t_free(fz(64), 6));
    CHECK(is_t_free(fz(96), 6));
    CHECK(is_t_free(fz(1), 2));
    CHECK(is_t_free(fz(30), 2));
    CHECK_FALSE(is_t_free(fz(12), 2));
}

TEST_CASE("ratio_psi_over_n") {
    CHECK(ratio_psi_over_n(fz(2), 2) == q(3, 2));
    CHECK(ratio_psi_over_n(fz(12), 2) == ExactRatio(2));
    CHECK(ratio_psi_over_n(fz(4), 2) == ratio_psi_over_n(fz(2), 2));
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        REQUIRE(ratio_psi_over_n(fz(n), 5).raw() == oracle::psi_ratio(n, 5));
        REQUIRE(ratio_psi_over_n(fz(n), 5) * ExactRatio(static_cast<long>(n)) == psi_t(fz(n), 5));
    }
}

TEST_CASE("ExactRatio stays reduced with a positive denominator") {
    const auto r = q(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(q(10, 5).is_integer());
    CHECK(q(1, 3) < q(1, 2));
    CHECK_THROWS_AS(q(1, 0), DomainError);
}

TEST_CASE("property: multiplicativity on random coprime pairs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> pick(1, 1000000);
    int tested = 0;
    while (tested < 400) {
        const auto a = pick(rng);
        const auto b = pick(rng);
        if (std::gcd(a, b) != 1) continue;
        ++tested;
        const auto fa = fz(a), fb = fz(b), fab = fz(a * b);
        REQUIRE(sigma(fab) == sigma(fa) * sigma(fb));
        for (int t : {2, 3, 7}) REQUIRE(psi_t(fab, t) == psi_t(fa, t) * psi_t(fb, t));
    }
}

TEST_CASE("property: sigma <= psi_t on t-free n, equality iff all exponents are t-1") {
    // Full 1e6 range for t = 2..8 runs in the acceptance suite.
    const SmallestFactorSieve sieve(60000);
    for (int t = 2; t <= 8; ++t) {
        for (std::uint32_t n = 1; n <= 60000; ++n) {
            const auto f = sieve.factorize(n);
            if (!is_t_free(f, t)) continue;
            const auto s = sigma(f), p = psi_t(f, t);
            bool all_top = true;
            for (const auto& pp : f.factors) all_top = all_top && pp.exponent == unsigned(t - 1);
            REQUIRE(s <= p);
            REQUIRE((s == p) == all_top);
        }
    }
}

TEST_CASE("property: psi_t increases with t except at n = 1") {
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        const auto f = fz(n);
        for (int t = 2; t <= 9; ++t) {
            const auto lo = psi_t(f, t), hi = psi_t(f, t + 1);
            if (n == 1)
                REQUIRE(lo == hi);
            else
                REQUIRE(lo < hi);
        }
    }
}
