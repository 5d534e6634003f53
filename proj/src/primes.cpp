#include "dpsi/primes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dpsi/errors.hpp"
#include "dpsi/summation.hpp"

namespace dpsi {

namespace {

constexpr std::uint64_t kSegmentBytes = 1u << 18;
constexpr std::uint64_t kMaxLimit = 0xFFFFFFFFull;

std::vector<std::uint32_t> small_sieve(std::uint64_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

}  // namespace

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while (r + 1 <= n / (r + 1)) ++r;
    return r;
}

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit) {
    if (limit < 2) throw DomainError("prime table limit must be >= 2");
    if (limit > kMaxLimit) throw DomainError("prime table limit must be < 2^32");

    const auto root = isqrt(limit);
    const auto base = small_sieve(root);

    // Rough pi(x) estimate to avoid repeated regrowth.
    const double lx = std::log(static_cast<double>(limit));
    primes_.reserve(static_cast<std::size_t>(1.3 * static_cast<double>(limit) / lx) + 16);

    std::vector<unsigned char> mark(kSegmentBytes);
    for (std::uint64_t lo = 2; lo <= limit; lo += kSegmentBytes) {
        const std::uint64_t hi = std::min(limit + 1, lo + kSegmentBytes);  // [lo, hi)
        std::fill(mark.begin(), mark.end(), 0);
        for (const std::uint64_t p : base) {
            if (p * p >= hi) break;
            std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
            for (std::uint64_t m = start; m < hi; m += p) mark[m - lo] = 1;
        }
        for (std::uint64_t v = lo; v < hi; ++v)
            if (!mark[v - lo]) primes_.push_back(static_cast<std::uint32_t>(v));
    }
    primes_.shrink_to_fit();

    theta_prefix_.reserve(primes_.size() + 1);
    theta_prefix_.push_back(0.0);
    CompensatedSum acc;
    for (const auto p : primes_) {
        acc.add(std::log(static_cast<double>(p)));
        theta_prefix_.push_back(acc.value());
    }
}

std::uint64_t PrimeTable::nth_prime(std::size_t n) const {
    if (n == 0 || n > primes_.size())
        throw IndexError("prime index " + std::to_string(n) + " outside table of " +
                         std::to_string(primes_.size()) + " primes (limit " +
                         std::to_string(limit_) + "); enlarge the sieve");
    return primes_[n - 1];
}

double PrimeTable::theta(std::size_t n) const {
    if (n > primes_.size())
        throw IndexError("theta index " + std::to_string(n) + " outside table of " +
                         std::to_string(primes_.size()) + " primes; enlarge the sieve");
    return theta_prefix_[n];
}

std::size_t PrimeTable::count_up_to(std::uint64_t x) const {
    if (x > limit_)
        throw CoverageError("pi(" + std::to_string(x) + ") requested beyond sieve limit " +
                                std::to_string(limit_),
                            x);
    return static_cast<std::size_t>(
        std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

PrimeTable build_table(std::uint64_t limit) { return PrimeTable(limit); }

std::uint64_t nth_prime(const PrimeTable& table, std::size_t n) { return table.nth_prime(n); }

double theta(const PrimeTable& table, std::size_t n) { return table.theta(n); }

std::uint64_t sieve_limit_for_index(std::size_t n) {
    if (n < 6) return 13;
    const double x = static_cast<double>(n);
    return static_cast<std::uint64_t>(x * (std::log(x) + std::log(std::log(x)))) + 1;
}

}  // namespace dpsi
