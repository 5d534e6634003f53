#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "dpsi/multiplicative.hpp"
#include "dpsi/primes.hpp"
#include "dpsi/summation.hpp"

namespace dpsi {

/// One step of the primorial walk N_0 = 1, N_1 = 2, N_2 = 6, ...
///
/// Everything is kept in log space: N_10596 already has 48338 digits.
/// log_psi_ratio(t) = sum_{k <= n} log(1 + 1/p_k + ... + 1/p_k^(t-1))
/// = log(Psi_t(N_n) / N_n), accumulated with compensated summation.
class PrimorialPoint {
public:
    /// The empty primorial N_0 = 1, tracking the given t values (each >= 2).
    static PrimorialPoint origin(std::span<const int> ts);

    /// Jumps straight to index n by advancing from the origin.
    static PrimorialPoint at(std::size_t n, std::span<const int> ts, const PrimeTable& table);

    std::size_t index() const noexcept { return n_; }
    /// p_n; 1 at the origin.
    std::uint64_t prime() const noexcept { return p_; }
    /// log N_n = theta(p_n).
    double log_primorial() const noexcept { return log_n_; }
    /// Throws DomainError if t is not tracked.
    double log_psi_ratio(int t) const;
    std::vector<int> tracked() const;

    /// The point for index n + 1. Throws CoverageError if the table has no
    /// p_{n+1}. *this is unchanged.
    PrimorialPoint advance(const PrimeTable& table) const;

private:
    std::size_t n_ = 0;
    std::uint64_t p_ = 1;
    double log_n_ = 0.0;
    std::map<int, CompensatedSum> acc_;
};

PrimorialPoint cursor_advance(const PrimorialPoint& point, const PrimeTable& table);

/// log(1 + 1/p + ... + 1/p^(t-1)) evaluated as log1p(-p^-t) - log1p(-1/p).
double log_local_psi_factor(std::uint64_t p, int t);

/// R_t(N_n) = (Psi_t(N_n)/N_n) / log log N_n. Throws DomainError for n < 2.
double r_t(const PrimorialPoint& point, int t);

/// R_t(m) for an arbitrary m >= 3, from its exact ratio.
double r_t(const ExactRatio& psi_ratio, std::uint64_t m);

enum class ChampionMode { strict, weak };

struct Champion {
    std::uint64_t m;
    ExactRatio ratio;  // Psi_t(m)/m
};

/// Left-to-right maxima of m -> Psi_t(m)/m on [1, limit], compared as exact
/// rationals. Strict mode needs a new value > every earlier one, weak mode
/// >=. m = 1 is always the first champion.
std::vector<Champion> champion_scan(std::uint64_t limit, int t, ChampionMode mode);

struct ReductionReport {
    bool holds = true;
    std::uint64_t checked = 0;
    std::optional<std::uint64_t> witness;
    /// min over m of (R_t(N_n) - R_t(m)) / R_t(N_n).
    double worst_relative_gap = 0.0;
    std::uint64_t worst_at = 0;

    explicit operator bool() const noexcept { return holds; }
};

/// Checks R_t(m) < R_t(N_n) for every m in [6, limit] with N_n < m < N_{n+1}
/// (m = N_n itself is skipped). The Psi ratio comparison is exact; log log
/// is floating point.
ReductionReport reduction_check(std::uint64_t limit, int t);

}  // namespace dpsi
