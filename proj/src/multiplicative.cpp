#include "dpsi/multiplicative.hpp"

#include <string>
#include <utility>

#include "dpsi/errors.hpp"

namespace dpsi {

namespace {

void require_t(int t) {
    if (t < 2) throw DomainError("t must be >= 2, got " + std::to_string(t));
}

mpz_class to_mpz(std::uint64_t v) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return z;
}

mpz_class power(std::uint64_t base, unsigned exponent) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), to_mpz(base).get_mpz_t(), exponent);
    return r;
}

}  // namespace

ExactRatio::ExactRatio(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw DomainError("zero denominator");
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
}

ExactRatio::ExactRatio(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

std::string ExactRatio::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Factorization factorize(std::uint64_t n, const PrimeTable& table) {
    if (n == 0) throw DomainError("cannot factorize 0");
    Factorization f;
    f.value = n;
    std::uint64_t rest = n;
    for (const std::uint64_t p : table.primes()) {
        if (p * p > rest) break;
        if (rest % p != 0) continue;
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        f.factors.push_back({p, e});
    }
    if (rest > 1) {
        const std::uint64_t lim = table.limit();
        // Cofactor is prime if no prime up to sqrt(rest) divides it; all primes
        // up to min(limit, sqrt(rest)) have been tried.
        if (rest > lim && lim < isqrt(rest))
            throw CoverageError("cannot certify cofactor " + std::to_string(rest) + " of " +
                                    std::to_string(n) + " as prime; enlarge the sieve to " +
                                    std::to_string(isqrt(rest)),
                                isqrt(rest));
        f.factors.push_back({rest, 1});
    }
    return f;
}

SmallestFactorSieve::SmallestFactorSieve(std::uint32_t limit) : limit_(limit), spf_(limit + 1u, 0) {
    if (limit >= 1) spf_[1] = 1;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] != 0) continue;
        spf_[i] = static_cast<std::uint32_t>(i);
        for (std::uint64_t j = i * i; j <= limit; j += i)
            if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
}

Factorization SmallestFactorSieve::factorize(std::uint32_t n) const {
    if (n == 0 || n > limit_)
        throw CoverageError("value " + std::to_string(n) + " outside smallest-factor sieve of " +
                                std::to_string(limit_),
                            n);
    Factorization f;
    f.value = n;
    while (n > 1) {
        const std::uint32_t p = spf_[n];
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.factors.push_back({p, e});
    }
    return f;
}

ExactRatio sigma(const Factorization& f) {
    // sigma(p^a) = (p^(a+1) - 1) / (p - 1)
    mpz_class product = 1;
    for (const auto& [p, a] : f.factors) product *= (power(p, a + 1) - 1) / (to_mpz(p) - 1);
    return ExactRatio(mpq_class(product));
}

ExactRatio psi_t(const Factorization& f, int t) {
    require_t(t);
    // Local factor p^a (p^t - 1) / (p^(t-1) (p - 1)).
    mpz_class num = 1;
    mpz_class den = 1;
    const auto tu = static_cast<unsigned>(t);
    for (const auto& [p, a] : f.factors) {
        const mpz_class pz = to_mpz(p);
        num *= power(p, a) * (power(p, tu) - 1);
        den *= power(p, tu - 1) * (pz - 1);
    }
    return ExactRatio(num, den);
}

bool is_t_free(const Factorization& f, int t) {
    require_t(t);
    for (const auto& pp : f.factors)
        if (pp.exponent >= static_cast<unsigned>(t)) return false;
    return true;
}

ExactRatio ratio_psi_over_n(const Factorization& f, int t) {
    require_t(t);
    mpz_class num = 1;
    mpz_class den = 1;
    const auto tu = static_cast<unsigned>(t);
    for (const auto& pp : f.factors) {
        const mpz_class pz = to_mpz(pp.prime);
        num *= power(pp.prime, tu) - 1;
        den *= power(pp.prime, tu - 1) * (pz - 1);
    }
    return ExactRatio(num, den);
}

}  // namespace dpsi
