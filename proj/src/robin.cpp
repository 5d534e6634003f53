#include "dpsi/robin.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "dpsi/bounds.hpp"
#include "dpsi/errors.hpp"
#include "dpsi/multiplicative.hpp"
#include "dpsi/primorial.hpp"
#include "precise.hpp"

namespace dpsi {

namespace {

constexpr std::array<std::uint64_t, 26> kKnownViolators = {
    3,  4,  5,   6,   8,   9,   10,  12,  16,  18,   20,   24,   30,
    36, 48, 60,  72,  84,  120, 180, 240, 360, 720,  840,  2520, 5040,
};

constexpr std::uint64_t kBytesPerEntry = 2 * sizeof(std::uint64_t);

double robin_threshold(std::uint64_t n) {
    const double x = static_cast<double>(n);
    return kExpEulerGamma * x * std::log(std::log(x));
}

RobinVerdict make_verdict(std::uint64_t n, mpz_class sigma) {
    RobinVerdict v;
    v.n = n;
    v.sigma = std::move(sigma);
    v.threshold = robin_threshold(n);
    v.margin = v.threshold - v.sigma.get_d();
    if (std::fabs(v.margin) < static_cast<double>(n) * kPrecisionBand) {
        v.precision_critical = true;
        v.margin = precise::robin_margin(n, v.sigma);
        v.rechecked = true;
    }
    v.holds = v.margin > 0;
    return v;
}

}  // namespace

RobinVerdict robin_verdict(std::uint64_t n, const PrimeTable& table) {
    if (n < 3) throw DomainError("Robin verdict needs n >= 3, got " + std::to_string(n));
    return make_verdict(n, sigma(factorize(n, table)).numerator());
}

std::span<const std::uint64_t> known_violators() { return kKnownViolators; }

std::uint64_t max_segment_size(const ScanOptions& options) {
    return options.memory_budget_bytes / kBytesPerEntry;
}

std::vector<RobinVerdict> robin_scan(std::uint64_t from, std::uint64_t to,
                                     const PrimeTable& table, const ScanOptions& options) {
    if (from < 3) throw DomainError("Robin scan starts at n >= 3, got " + std::to_string(from));
    if (from > to) throw DomainError("Robin scan needs from <= to");
    if (to > (std::uint64_t{1} << 53))
        throw DomainError("Robin scan is limited to n <= 2^53 (exact sigma as double)");
    if (options.segment_size == 0) throw DomainError("segment size must be positive");
    const auto max_seg = max_segment_size(options);
    if (options.segment_size > max_seg)
        throw ResourceError("segment of " + std::to_string(options.segment_size) +
                                " integers exceeds the memory budget; maximum segment size is " +
                                std::to_string(max_seg),
                            max_seg);
    const auto root = isqrt(to);
    if (table.limit() < root)
        throw CoverageError("Robin scan to " + std::to_string(to) + " needs primes up to " +
                                std::to_string(root),
                            root);

    const auto primes = table.primes();
    const auto span = std::min(options.segment_size, to - from + 1);
    std::vector<std::uint64_t> rest(span);
    std::vector<std::uint64_t> sig(span);
    std::vector<RobinVerdict> out;

    for (std::uint64_t lo = from;; lo += span) {
        const std::uint64_t hi = std::min(to, lo + span - 1);  // inclusive
        const std::size_t len = hi - lo + 1;
        for (std::size_t i = 0; i < len; ++i) {
            rest[i] = lo + i;
            sig[i] = 1;
        }
        for (const std::uint64_t p : primes) {
            if (p * p > hi) break;
            for (std::uint64_t m = (lo + p - 1) / p * p; m <= hi; m += p) {
                const std::size_t i = m - lo;
                std::uint64_t pk = 1;
                std::uint64_t local = 1;
                do {
                    rest[i] /= p;
                    pk *= p;
                    local += pk;
                } while (rest[i] % p == 0);
                sig[i] *= local;
            }
        }
        for (std::size_t i = 0; i < len; ++i) {
            if (rest[i] > 1) sig[i] *= rest[i] + 1;
            const std::uint64_t n = lo + i;
            const double s = static_cast<double>(sig[i]);
            const double thr = robin_threshold(n);
            // Fast accept far from the boundary; anything close gets a verdict.
            if (thr - s > static_cast<double>(n) * kPrecisionBand) continue;
            auto v = make_verdict(n, mpz_class(static_cast<unsigned long>(sig[i])));
            if (!v.holds) out.push_back(std::move(v));
        }
        if (hi == to) break;
    }
    return out;
}

TheoremReport tfree_robin_theorem_check(int t, std::uint64_t scan_limit, const PrimeTable& table) {
    if (t != 6 && t != 7)
        throw DomainError("the t-free theorem check covers t in {6, 7}, got " + std::to_string(t));
    if (scan_limit < kLargestKnownViolator + 1)
        throw DomainError("scan limit must be >= 5041");
    if (scan_limit > 0xFFFFFFFEull) throw DomainError("scan limit too large for the factor sieve");

    TheoremReport rep;
    rep.t = t;
    rep.scan_limit = scan_limit;
    const SmallestFactorSieve sieve(static_cast<std::uint32_t>(scan_limit));

    // (a)
    rep.branch_a = true;
    const auto known = known_violators();
    for (const auto& v : robin_scan(3, scan_limit, table)) {
        if (!is_t_free(sieve.factorize(static_cast<std::uint32_t>(v.n)), t)) continue;
        const bool is_known =
            v.n <= kLargestKnownViolator && std::find(known.begin(), known.end(), v.n) != known.end();
        if (!is_known) {
            rep.branch_a = false;
            rep.witness = v.n;
            rep.failure = "t-free Robin violator outside the known list: " + std::to_string(v.n);
            break;
        }
        rep.small_violators.push_back(v.n);
    }

    // (b)
    const auto n1 = n1_search(t, FloorMode::unconstrained, table);
    rep.n1 = n1.n1;
    const int ts[] = {t};
    rep.r_t_at_n1 = r_t(PrimorialPoint::at(n1.n1, ts, table), t);
    rep.branch_b = n1.stays_satisfied && rep.r_t_at_n1 < kExpEulerGamma;
    if (!rep.branch_b && rep.failure.empty())
        rep.failure = "R_t(N_n1) = " + std::to_string(rep.r_t_at_n1) + " is not below e^gamma";

    // (c)
    rep.branch_c = true;
    for (std::uint32_t n = 1; n <= scan_limit; ++n) {
        const auto f = sieve.factorize(n);
        if (!is_t_free(f, t)) continue;
        ++rep.t_free_count;
        const auto s = sigma(f);
        const auto psi = psi_t(f, t);
        if (s > psi) {
            rep.branch_c = false;
            if (!rep.witness) rep.witness = n;
            if (rep.failure.empty()) rep.failure = "sigma exceeds Psi_t at " + std::to_string(n);
            break;
        }
        if (s == psi) ++rep.bridge_equalities;
    }
    return rep;
}

}  // namespace dpsi
