#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dpsi/primes.hpp"

namespace dpsi {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime-power decomposition, primes strictly increasing. value == 1 has
/// no factors.
struct Factorization {
    std::uint64_t value = 1;
    std::vector<PrimePower> factors;
};

/// Reduced rational with positive denominator.
class ExactRatio {
public:
    ExactRatio() = default;
    ExactRatio(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    ExactRatio(const mpz_class& numerator, const mpz_class& denominator);
    explicit ExactRatio(mpq_class q);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    bool is_integer() const { return q_.get_den() == 1; }
    double to_double() const { return q_.get_d(); }
    const mpq_class& raw() const { return q_; }

    /// "a" for integers, "a/b" otherwise.
    std::string str() const;

    ExactRatio& operator*=(const ExactRatio& other) {
        q_ *= other.q_;
        return *this;
    }
    friend ExactRatio operator*(ExactRatio a, const ExactRatio& b) { return a *= b; }
    friend ExactRatio operator/(const ExactRatio& a, const ExactRatio& b) {
        return ExactRatio(mpq_class(a.q_ / b.q_));
    }

    friend bool operator==(const ExactRatio& a, const ExactRatio& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_{0};
};

/// Trial division by the table's primes. A cofactor left after dividing out
/// every prime <= sqrt(n) is prime; if the table stops short of sqrt(n) and
/// the cofactor could still be composite, throws CoverageError.
Factorization factorize(std::uint64_t n, const PrimeTable& table);

/// Smallest-prime-factor table for batch factorization of [1, limit].
class SmallestFactorSieve {
public:
    explicit SmallestFactorSieve(std::uint32_t limit);

    std::uint32_t limit() const noexcept { return limit_; }
    std::uint32_t smallest_factor(std::uint32_t n) const { return spf_[n]; }
    Factorization factorize(std::uint32_t n) const;

private:
    std::uint32_t limit_;
    std::vector<std::uint32_t> spf_;
};

ExactRatio sigma(const Factorization& f);

/// Psi_t(n) = n * prod_{p | n} (1 + 1/p + ... + 1/p^(t-1)). Throws DomainError
/// for t < 2.
ExactRatio psi_t(const Factorization& f, int t);

bool is_t_free(const Factorization& f, int t);

/// Psi_t(n)/n; depends only on the radical of n.
ExactRatio ratio_psi_over_n(const Factorization& f, int t);

}  // namespace dpsi
