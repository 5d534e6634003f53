#include "dpsi/bounds.hpp"

#include <algorithm>
#include <array>
#include <cfloat>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "dpsi/errors.hpp"
#include "dpsi/primorial.hpp"
#include "dpsi/summation.hpp"
#include "precise.hpp"

namespace dpsi {

namespace {

void require_t(int t) {
    if (t < 2) throw DomainError("t must be >= 2, got " + std::to_string(t));
}

void require_index(std::size_t n, const PrimeTable& table) {
    if (n < 2) throw DomainError("index n must be >= 2 so that log log N_n > 0");
    if (!table.covers_index(n))
        throw CoverageError("index " + std::to_string(n) + " beyond table of " +
                                std::to_string(table.size()) + " primes",
                            sieve_limit_for_index(n));
}

void require_fonda_index(std::size_t n) {
    if (n < kFondaThreshold)
        throw DomainError("n = " + std::to_string(n) + " is below the hypothesis n >= 2263");
}

constexpr long kZetaCutoff = 32;

// B_{2k} / (2k)!, k = 1..7; the last entry is only used for the error bound.
constexpr std::array<long double, 7> kBernoulliOverFactorial = {
    1.0L / 6.0L / 2.0L,
    -1.0L / 30.0L / 24.0L,
    1.0L / 42.0L / 720.0L,
    -1.0L / 30.0L / 40320.0L,
    5.0L / 66.0L / 3628800.0L,
    -691.0L / 2730.0L / 479001600.0L,
    7.0L / 6.0L / 87178291200.0L,
};

struct Worst {
    double margin = std::numeric_limits<double>::infinity();
    std::string at;
    std::uint64_t checks = 0;
    std::uint64_t rechecked = 0;
    bool failed = false;

    template <class Recheck>
    void record(double margin_in, const std::string& where, Recheck&& recheck) {
        ++checks;
        double m = margin_in;
        if (std::fabs(m) < kPrecisionBand) {
            m = recheck();
            ++rechecked;
        }
        if (!(m > 0)) failed = true;
        if (m < margin) {
            margin = m;
            at = where;
        }
    }

    SuiteResult finish(std::string name) const {
        SuiteResult r;
        r.name = std::move(name);
        r.status = failed ? SuiteStatus::fail : SuiteStatus::pass;
        r.checks = checks;
        r.worst_margin = margin;
        r.worst_at = at;
        r.rechecked = rechecked;
        return r;
    }
};

}  // namespace

ZetaValue zeta(int t) {
    require_t(t);
    const long double s = t;
    const long double m = kZetaCutoff;

    // sum_{n >= M} n^-s = M^(1-s)/(s-1) + M^-s/2 + sum_k B_2k/(2k)! s(s+1)...(s+2k-2) M^(-s-2k+1)
    long double tail = std::pow(m, 1.0L - s) / (s - 1.0L) + std::pow(m, -s) / 2.0L;
    long double rising = s;  // s (s+1) ... (s+2k-2)
    long double next_term = 0.0L;
    for (std::size_t k = 1; k <= kBernoulliOverFactorial.size(); ++k) {
        const long double term = kBernoulliOverFactorial[k - 1] * rising *
                                 std::pow(m, -s - 2.0L * static_cast<long double>(k) + 1.0L);
        if (k == kBernoulliOverFactorial.size())
            next_term = term;
        else
            tail += term;
        rising *= (s + 2.0L * static_cast<long double>(k) - 1.0L) *
                  (s + 2.0L * static_cast<long double>(k));
    }

    // Smallest terms first.
    long double excess = tail;
    for (long n = kZetaCutoff - 1; n >= 2; --n) excess += std::pow(static_cast<long double>(n), -s);

    ZetaValue z;
    z.t = t;
    z.excess = static_cast<double>(excess);
    z.value = static_cast<double>(1.0L + excess);
    z.abs_error_bound = static_cast<double>(std::fabs(next_term)) +
                        static_cast<double>(kZetaCutoff * LDBL_EPSILON * excess) +
                        DBL_EPSILON * z.value;
    return z;
}

double f_of_n(std::size_t n, const PrimeTable& table) {
    require_index(n, table);
    const double lp = std::log(static_cast<double>(table.nth_prime(n)));
    return 1.0 + kFondaConstant / (lp * std::log(table.theta(n)));
}

CriterionReport criterion(int t, std::size_t n, const PrimeTable& table) {
    require_t(t);
    require_index(n, table);
    CriterionReport r;
    r.t = t;
    r.n = n;
    r.p_n = table.nth_prime(n);
    r.lhs = std::exp(2.0 / static_cast<double>(r.p_n)) * f_of_n(n, table);
    r.rhs = zeta(t).value;
    r.margin = r.rhs - r.lhs;
    if (std::fabs(r.margin) < kPrecisionBand) {
        r.precision_critical = true;
        r.margin = precise::criterion_margin(t, n, table);
        r.rechecked = true;
    }
    r.satisfied = r.margin > 0;
    return r;
}

N1Result n1_search(int t, FloorMode mode, const PrimeTable& table) {
    if (t < 2 || t > kMaxT)
        throw DomainError("n1_search needs t in [2, 64], got " + std::to_string(t));
    const std::size_t start = mode == FloorMode::unconstrained ? 2 : kFondaThreshold;

    N1Result res;
    res.t = t;
    for (std::size_t n = start; table.covers_index(n); ++n) {
        const auto rep = criterion(t, n, table);
        if (!rep.satisfied) continue;
        res.n1 = n;
        res.p_n1 = rep.p_n;
        res.margin = rep.margin;
        res.precision_critical = rep.precision_critical;
        res.previous_margin = n > start ? criterion(t, n - 1, table).margin
                                        : std::numeric_limits<double>::quiet_NaN();
        break;
    }
    if (res.n1 == 0) {
        const std::size_t examined = std::max(start, table.size());
        throw CoverageError("no crossing for t = " + std::to_string(t) + " up to index " +
                                std::to_string(examined) + " (p = " +
                                std::to_string(table.limit()) + "); enlarge the sieve",
                            2 * table.limit());
    }

    const std::size_t last = res.n1 + kN1Lookahead;
    if (!table.covers_index(last))
        throw CoverageError("lookahead past n_1(" + std::to_string(t) + ") = " +
                                std::to_string(res.n1) + " needs index " + std::to_string(last),
                            sieve_limit_for_index(last));
    res.stays_satisfied = true;
    for (std::size_t n = res.n1 + 1; n <= last; ++n)
        if (!criterion(t, n, table).satisfied) res.stays_satisfied = false;
    res.verified_through = last;
    return res;
}

Magnitude primorial_magnitude(std::size_t n, const PrimeTable& table) {
    if (n < 1) throw DomainError("primorial magnitude needs n >= 1");
    if (!table.covers_index(n))
        throw CoverageError("index " + std::to_string(n) + " beyond table",
                            sieve_limit_for_index(n));
    const double log10_value = table.theta(n) / std::log(10.0);
    Magnitude m;
    m.exponent10 = static_cast<long>(std::floor(log10_value));
    m.mantissa = std::pow(10.0, log10_value - static_cast<double>(m.exponent10));
    if (m.mantissa >= 10.0) {  // rounding at an exact power boundary
        m.mantissa /= 10.0;
        ++m.exponent10;
    }
    return m;
}

double mertens_partial_product(std::uint64_t x, const PrimeTable& table) {
    if (x < 2) throw DomainError("Mertens product needs x >= 2");
    const std::size_t count = table.count_up_to(x);
    CompensatedSum acc;
    for (std::size_t k = 0; k < count; ++k)
        acc.add(-std::log1p(-1.0 / static_cast<double>(table.primes()[k])));
    return std::exp(acc.value());
}

double mertens_upper_bound(std::uint64_t x) {
    if (x < 2) throw DomainError("Mertens bound needs x >= 2");
    const double lx = std::log(static_cast<double>(x));
    return kExpEulerGamma * (lx + 1.0 / lx);
}

TailProduct zeta_tail_product(int t, std::size_t n, const PrimeTable& table) {
    require_t(t);
    require_index(n, table);
    const auto z = zeta(t);
    CompensatedSum log_tail(std::log1p(z.excess));
    for (std::size_t k = 1; k <= n; ++k)
        log_tail.add(std::log1p(-std::pow(static_cast<double>(table.nth_prime(k)), -t)));
    TailProduct tp;
    tp.value = std::exp(log_tail.value());
    tp.abs_error_bound =
        tp.value * (z.abs_error_bound / z.value + static_cast<double>(n + 2) * DBL_EPSILON);
    return tp;
}

MarginCheck robmod_check(std::size_t n, const PrimeTable& table) {
    require_fonda_index(n);
    require_index(n, table);
    const double lp = std::log(static_cast<double>(table.nth_prime(n)));
    MarginCheck c;
    c.lhs = lp;
    c.rhs = std::log(table.theta(n)) + kRobmodConstant / lp;
    c.margin = c.rhs - c.lhs;
    if (std::fabs(c.margin) < kPrecisionBand) {
        c.precision_critical = true;
        c.margin = precise::robmod_margin(n, table);
        c.rechecked = true;
    }
    c.holds = c.margin > 0;
    return c;
}

namespace {

double fonda_bound_with(double zeta_t, std::size_t n, const PrimeTable& table) {
    const double p = static_cast<double>(table.nth_prime(n));
    return std::exp(kEulerGamma + 2.0 / p) / zeta_t *
           (std::log(table.theta(n)) + kFondaConstant / std::log(p));
}

}  // namespace

double fonda_upper_bound(int t, std::size_t n, const PrimeTable& table) {
    require_t(t);
    require_fonda_index(n);
    require_index(n, table);
    return fonda_bound_with(zeta(t).value, n, table);
}

std::optional<int> admissible_t(std::size_t n, const PrimeTable& table) {
    require_index(n, table);
    std::optional<int> best;
    for (int t = 2; t <= kMaxT; ++t) {
        if (!criterion(t, n, table).satisfied) break;
        best = t;
    }
    return best;
}

std::vector<GeoPoint> geo_asymptotic_check(int t_max) {
    if (t_max < 4) throw DomainError("geo check needs t_max >= 4");
    std::vector<GeoPoint> out;
    for (int t = 4; t <= t_max; ++t) out.push_back({t, std::ldexp(zeta(t).excess, t)});
    return out;
}

const char* to_string(SuiteStatus s) {
    switch (s) {
        case SuiteStatus::pass: return "PASS";
        case SuiteStatus::fail: return "FAIL";
        case SuiteStatus::skipped: return "SKIPPED";
    }
    return "?";
}

std::vector<std::uint64_t> rs_sample_points(std::uint64_t x_max, std::size_t samples,
                                            std::uint64_t seed) {
    if (x_max < 2) throw DomainError("rs sampling needs x_max >= 2");
    std::vector<std::uint64_t> xs;
    for (std::uint64_t x = 2; x <= x_max; x *= 2) xs.push_back(x);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(2, x_max);
    for (std::size_t i = 0; i < samples; ++i) xs.push_back(pick(rng));
    return xs;
}

SuiteResult rs_suite(const PrimeTable& table, std::span<const std::uint64_t> xs) {
    std::vector<std::uint64_t> sorted(xs.begin(), xs.end());
    std::sort(sorted.begin(), sorted.end());
    if (!sorted.empty() && sorted.back() > table.limit())
        throw CoverageError("rs suite needs primes up to " + std::to_string(sorted.back()),
                            sorted.back());

    Worst w;
    CompensatedSum log_product;
    std::size_t next = 0;  // index into table.primes()
    const auto primes = table.primes();
    for (const auto x : sorted) {
        if (x < 2) throw DomainError("rs suite needs x >= 2");
        while (next < primes.size() && primes[next] <= x)
            log_product.add(-std::log1p(-1.0 / static_cast<double>(primes[next++])));
        const double margin = mertens_upper_bound(x) - std::exp(log_product.value());
        w.record(margin, "x=" + std::to_string(x), [&] { return precise::rs_margin(x, table); });
    }
    return w.finish("rs");
}

SuiteResult us_suite(const PrimeTable& table, int t_min, int t_max, std::size_t n_max) {
    require_t(t_min);
    if (t_max < t_min) throw DomainError("us suite needs t_min <= t_max");
    require_index(n_max, table);
    Worst w;
    for (int t = t_min; t <= t_max; ++t) {
        CompensatedSum log_tail(std::log1p(zeta(t).excess));
        for (std::size_t n = 1; n <= n_max; ++n) {
            const double p = static_cast<double>(table.nth_prime(n));
            log_tail.add(std::log1p(-std::pow(p, -t)));
            if (n < 2) continue;
            const double margin = std::exp(2.0 / p) - std::exp(log_tail.value());
            w.record(margin, "t=" + std::to_string(t) + ",n=" + std::to_string(n),
                     [&] { return precise::us_margin(t, n, table); });
        }
    }
    return w.finish("us");
}

SuiteResult robmod_suite(const PrimeTable& table, std::size_t n_max) {
    if (n_max < kFondaThreshold) {
        SuiteResult r;
        r.name = "robmod";
        r.note = "n_max below hypothesis n >= 2263";
        return r;
    }
    require_index(n_max, table);
    Worst w;
    for (std::size_t n = kFondaThreshold; n <= n_max; ++n) {
        const double lp = std::log(static_cast<double>(table.nth_prime(n)));
        const double margin = std::log(table.theta(n)) + kRobmodConstant / lp - lp;
        w.record(margin, "n=" + std::to_string(n),
                 [&] { return precise::robmod_margin(n, table); });
    }
    return w.finish("robmod");
}

SuiteResult fonda_suite(const PrimeTable& table, int t_min, int t_max, std::size_t n_max) {
    require_t(t_min);
    if (t_max < t_min) throw DomainError("fonda suite needs t_min <= t_max");
    if (n_max < kFondaThreshold) {
        SuiteResult r;
        r.name = "fonda";
        r.note = "n_max below hypothesis n >= 2263";
        return r;
    }
    require_index(n_max, table);

    std::vector<int> ts;
    std::vector<double> zetas;
    for (int t = t_min; t <= t_max; ++t) {
        ts.push_back(t);
        zetas.push_back(zeta(t).value);
    }
    auto point = PrimorialPoint::at(kFondaThreshold - 1, ts, table);

    Worst w;
    for (std::size_t n = kFondaThreshold; n <= n_max; ++n) {
        point = point.advance(table);
        for (std::size_t i = 0; i < ts.size(); ++i) {
            const int t = ts[i];
            const double margin =
                fonda_bound_with(zetas[i], n, table) - std::exp(point.log_psi_ratio(t));
            w.record(margin, "t=" + std::to_string(t) + ",n=" + std::to_string(n),
                     [&] { return precise::fonda_margin(t, n, table); });
        }
    }
    return w.finish("fonda");
}

}  // namespace dpsi
