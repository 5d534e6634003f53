#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dpsi/primes.hpp"

namespace dpsi {

inline constexpr double kEulerGamma = 0.577215664901532860606;
inline constexpr double kExpEulerGamma = 1.78107241799019798524;

/// n_0: the first index with p_n >= 20000 (p_2263 = 20011).
inline constexpr std::size_t kFondaThreshold = 2263;
inline constexpr double kFondaConstant = 1.1253;
inline constexpr double kRobmodConstant = 0.1253;

/// Margins with |margin| below this are recomputed at 256 bits.
inline constexpr double kPrecisionBand = 1e-9;

struct ZetaValue {
    int t = 0;
    double value = 0.0;
    /// zeta(t) - 1, summed from n = 2 so it keeps full relative precision.
    double excess = 0.0;
    double abs_error_bound = 0.0;
};

/// zeta(t) for integer t >= 2: direct sum over n <= 32 plus an
/// Euler-Maclaurin tail (integral, half term, Bernoulli corrections).
/// abs_error_bound covers the first omitted correction and summation
/// rounding. Throws DomainError for t < 2.
ZetaValue zeta(int t);

/// f(n) = 1 + 1.1253 / (log p_n * log log N_n). Needs n >= 2.
double f_of_n(std::size_t n, const PrimeTable& table);

struct CriterionReport {
    int t = 0;
    std::size_t n = 0;
    std::uint64_t p_n = 0;
    double lhs = 0.0;  // exp(2/p_n) f(n)
    double rhs = 0.0;  // zeta(t)
    double margin = 0.0;
    bool satisfied = false;
    bool precision_critical = false;
    bool rechecked = false;
};

/// exp(2/p_n) f(n) < zeta(t). Throws DomainError for t < 2 or n < 2.
CriterionReport criterion(int t, std::size_t n, const PrimeTable& table);

enum class FloorMode { unconstrained, floored_at_n0 };

struct N1Result {
    int t = 0;
    std::size_t n1 = 0;
    std::uint64_t p_n1 = 0;
    double margin = 0.0;           // criterion margin at n1
    double previous_margin = 0.0;  // at n1 - 1 (NaN when n1 is the search start)
    std::size_t verified_through = 0;
    bool stays_satisfied = false;  // for n1 + 1 .. n1 + 100
    bool precision_critical = false;
};

inline constexpr std::size_t kN1Lookahead = 100;

/// Least n (>= 2, or >= n_0 when floored) with criterion(t, n) satisfied,
/// plus a lookahead over the next 100 indices. Throws CoverageError
/// carrying the sieve bound to retry with if the table runs out first.
N1Result n1_search(int t, FloorMode mode, const PrimeTable& table);

struct Magnitude {
    double mantissa = 0.0;  // [1, 10)
    long exponent10 = 0;
};

/// N_n = mantissa * 10^exponent10 from theta(p_n) / log 10.
Magnitude primorial_magnitude(std::size_t n, const PrimeTable& table);

/// prod_{p <= x} (1 - 1/p)^-1, in log space.
double mertens_partial_product(std::uint64_t x, const PrimeTable& table);

/// e^gamma (log x + 1/log x), the upper bound for the product above.
double mertens_upper_bound(std::uint64_t x);

struct TailProduct {
    double value = 0.0;
    double abs_error_bound = 0.0;
};

/// prod_{p > p_n} (1 - 1/p^t)^-1 = zeta(t) prod_{p <= p_n} (1 - 1/p^t).
TailProduct zeta_tail_product(int t, std::size_t n, const PrimeTable& table);

struct MarginCheck {
    bool holds = false;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // rhs - lhs
    bool precision_critical = false;
    bool rechecked = false;
};

/// log p_n < log log N_n + 0.1253 / log p_n. Throws DomainError for n < 2263.
MarginCheck robmod_check(std::size_t n, const PrimeTable& table);

/// exp(gamma + 2/p_n) / zeta(t) * (log log N_n + 1.1253 / log p_n), the upper
/// bound for Psi_t(N_n)/N_n. Throws DomainError for n < 2263.
double fonda_upper_bound(int t, std::size_t n, const PrimeTable& table);

inline constexpr int kMaxT = 64;

/// Largest t in [2, 64] with criterion(t, n) satisfied; nullopt if t = 2
/// already fails. Satisfaction is downward closed in t since zeta decreases.
std::optional<int> admissible_t(std::size_t n, const PrimeTable& table);

struct GeoPoint {
    int t = 0;
    double scaled_gap = 0.0;  // (zeta(t) - 1) 2^t
};

/// (zeta(t) - 1) 2^t for t in [4, t_max]. Throws DomainError for t_max < 4.
std::vector<GeoPoint> geo_asymptotic_check(int t_max);

// Lemma suites. Each evaluates an inequality over a grid and reports the
// smallest margin; margins inside kPrecisionBand are recomputed at 256 bits
// before the verdict is taken.

enum class SuiteStatus { pass, fail, skipped };

const char* to_string(SuiteStatus s);

struct SuiteResult {
    std::string name;
    SuiteStatus status = SuiteStatus::skipped;
    std::uint64_t checks = 0;
    double worst_margin = 0.0;
    std::string worst_at;
    std::uint64_t rechecked = 0;
    std::string note;
};

/// Geometric grid 2, 4, 8, ... <= x_max, then `samples` uniform draws
/// from [2, x_max] (seeded, so reproducible).
std::vector<std::uint64_t> rs_sample_points(std::uint64_t x_max, std::size_t samples,
                                            std::uint64_t seed);

/// prod_{p <= x} (1 - 1/p)^-1 <= e^gamma (log x + 1/log x).
SuiteResult rs_suite(const PrimeTable& table, std::span<const std::uint64_t> xs);

/// prod_{p > p_n} (1 - 1/p^t)^-1 <= exp(2/p_n) over t in [t_min, t_max],
/// n in [2, n_max].
SuiteResult us_suite(const PrimeTable& table, int t_min, int t_max, std::size_t n_max);

/// Robmod over n in [2263, n_max]; skipped when n_max < 2263.
SuiteResult robmod_suite(const PrimeTable& table, std::size_t n_max);

/// Psi_t(N_n)/N_n <= fonda_upper_bound over n in [2263, n_max],
/// t in [t_min, t_max]; skipped when n_max < 2263.
SuiteResult fonda_suite(const PrimeTable& table, int t_min, int t_max, std::size_t n_max);

}  // namespace dpsi
