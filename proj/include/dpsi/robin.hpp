#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dpsi/primes.hpp"

namespace dpsi {

/// sigma(n) < e^gamma n log log n, decided with exact sigma and a float
/// threshold. Margins inside n * 1e-9 are recomputed at 256 bits.
struct RobinVerdict {
    std::uint64_t n = 0;
    mpz_class sigma;
    double threshold = 0.0;
    bool holds = false;
    double margin = 0.0;  // threshold - sigma
    bool precision_critical = false;
    bool rechecked = false;
};

/// Throws DomainError for n < 3 (log log n <= 0 below that).
RobinVerdict robin_verdict(std::uint64_t n, const PrimeTable& table);

/// Robin violators n >= 3, OEIS A067698 with 1 and 2 dropped. 5040 is the
/// largest.
std::span<const std::uint64_t> known_violators();
inline constexpr std::uint64_t kLargestKnownViolator = 5040;

struct ScanOptions {
    std::uint64_t segment_size = std::uint64_t{1} << 22;
    /// Per-segment working memory; segment_size * 16 bytes must fit.
    std::uint64_t memory_budget_bytes = std::uint64_t{1} << 30;
};

/// Largest segment that fits the budget.
std::uint64_t max_segment_size(const ScanOptions& options);

/// Every n in [from, to] with sigma(n) >= e^gamma n log log n, increasing.
/// sigma is accumulated by a segmented sieve; the table must cover
/// sqrt(to). Throws DomainError for from < 3 or from > to, CoverageError
/// for a short table, ResourceError when the segment exceeds the budget.
std::vector<RobinVerdict> robin_scan(std::uint64_t from, std::uint64_t to,
                                     const PrimeTable& table, const ScanOptions& options = {});

struct TheoremReport {
    int t = 0;
    std::uint64_t scan_limit = 0;
    std::uint64_t t_free_count = 0;

    // (a) every t-free violator in [3, scan_limit] is a known one <= 5040
    bool branch_a = false;
    std::vector<std::uint64_t> small_violators;  // t-free, accepted
    // (b) n_1(t) exists and R_t(N_{n_1}) < e^gamma
    bool branch_b = false;
    std::size_t n1 = 0;
    double r_t_at_n1 = 0.0;
    // (c) sigma(n) <= Psi_t(n) exactly for every t-free n in range
    bool branch_c = false;
    std::uint64_t bridge_equalities = 0;

    std::optional<std::uint64_t> witness;
    std::string failure;

    bool passed() const noexcept { return branch_a && branch_b && branch_c; }
};

/// Desk-scale run of the t-free Robin theorem for t in {6, 7}. A failing
/// branch is reported with its witness, not thrown.
TheoremReport tfree_robin_theorem_check(int t, std::uint64_t scan_limit, const PrimeTable& table);

}  // namespace dpsi
