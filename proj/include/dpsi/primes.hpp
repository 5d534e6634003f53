#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dpsi {

/// Ordered primes up to a sieve bound, with Chebyshev theta prefix sums.
///
/// Primes are addressed 1-based: nth_prime(1) == 2. Index 0 is the empty
/// product, so theta(0) == 0 == log N_0.
///
/// Error budget: theta_prefix is a compensated (Neumaier) sum of std::log
/// values. The summation itself contributes O(eps) relative error; each log
/// term is within one ulp, so the total stays under k * eps * theta(k).
/// Near the n_1(7) crossover (k ~ 1e4) that is ~2e-12 relative, far below
/// the ~1e-7 criterion margins it feeds.
///
/// Immutable after construction; concurrent readers are safe.
class PrimeTable {
public:
    /// Sieves [2, limit] with a segmented sieve of Eratosthenes.
    /// Throws DomainError if limit < 2 or limit >= 2^32.
    explicit PrimeTable(std::uint64_t limit);

    std::uint64_t limit() const noexcept { return limit_; }
    std::size_t size() const noexcept { return primes_.size(); }
    std::span<const std::uint32_t> primes() const noexcept { return primes_; }

    /// p_n. Throws IndexError if n == 0 or n > size().
    std::uint64_t nth_prime(std::size_t n) const;

    /// theta(p_n) = log N_n; theta(0) == 0. Throws IndexError if n > size().
    double theta(std::size_t n) const;

    /// pi(x) for x <= limit(). Throws CoverageError past the sieve bound.
    std::size_t count_up_to(std::uint64_t x) const;

    bool covers_index(std::size_t n) const noexcept { return n <= primes_.size(); }

private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> primes_;
    std::vector<double> theta_prefix_;
};

PrimeTable build_table(std::uint64_t limit);
std::uint64_t nth_prime(const PrimeTable& table, std::size_t n);
double theta(const PrimeTable& table, std::size_t n);

/// A sieve bound guaranteed to contain p_n (Rosser's bound
/// p_n < n (log n + log log n) for n >= 6).
std::uint64_t sieve_limit_for_index(std::size_t n);

/// floor(sqrt(n)) exactly.
std::uint64_t isqrt(std::uint64_t n);

}  // namespace dpsi
