#include "dpsi/primorial.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dpsi/errors.hpp"

namespace dpsi {

PrimorialPoint PrimorialPoint::origin(std::span<const int> ts) {
    PrimorialPoint pt;
    for (const int t : ts) {
        if (t < 2) throw DomainError("t must be >= 2, got " + std::to_string(t));
        pt.acc_.emplace(t, CompensatedSum{});
    }
    return pt;
}

PrimorialPoint PrimorialPoint::at(std::size_t n, std::span<const int> ts, const PrimeTable& table) {
    if (!table.covers_index(n))
        throw CoverageError("primorial index " + std::to_string(n) + " beyond table of " +
                                std::to_string(table.size()) + " primes",
                            sieve_limit_for_index(n));
    auto pt = origin(ts);
    while (pt.index() < n) pt = pt.advance(table);
    return pt;
}

double PrimorialPoint::log_psi_ratio(int t) const {
    const auto it = acc_.find(t);
    if (it == acc_.end()) throw DomainError("t = " + std::to_string(t) + " is not tracked");
    return it->second.value();
}

std::vector<int> PrimorialPoint::tracked() const {
    std::vector<int> out;
    for (const auto& kv : acc_) out.push_back(kv.first);
    return out;
}

double log_local_psi_factor(std::uint64_t p, int t) {
    const double x = 1.0 / static_cast<double>(p);
    return std::log1p(-std::pow(x, t)) - std::log1p(-x);
}

PrimorialPoint PrimorialPoint::advance(const PrimeTable& table) const {
    const std::size_t next = n_ + 1;
    if (!table.covers_index(next))
        throw CoverageError("primorial cursor exhausted the prime table at index " +
                                std::to_string(n_),
                            sieve_limit_for_index(next));
    PrimorialPoint out = *this;
    out.n_ = next;
    out.p_ = table.nth_prime(next);
    out.log_n_ = table.theta(next);
    for (auto& [t, sum] : out.acc_) sum.add(log_local_psi_factor(out.p_, t));
    return out;
}

PrimorialPoint cursor_advance(const PrimorialPoint& point, const PrimeTable& table) {
    return point.advance(table);
}

double r_t(const PrimorialPoint& point, int t) {
    if (point.index() < 2)
        throw DomainError("R_t(N_n) needs n >= 2 so that log log N_n > 0");
    return std::exp(point.log_psi_ratio(t)) / std::log(point.log_primorial());
}

double r_t(const ExactRatio& psi_ratio, std::uint64_t m) {
    if (m < 3) throw DomainError("R_t(m) needs m >= 3 so that log log m > 0");
    return psi_ratio.to_double() / std::log(std::log(static_cast<double>(m)));
}

std::vector<Champion> champion_scan(std::uint64_t limit, int t, ChampionMode mode) {
    if (t < 2) throw DomainError("t must be >= 2");
    if (limit < 1) throw DomainError("champion scan limit must be >= 1");
    if (limit > std::numeric_limits<std::uint32_t>::max() - 1)
        throw DomainError("champion scan limit too large for the factor sieve");

    const SmallestFactorSieve sieve(static_cast<std::uint32_t>(limit));
    std::vector<Champion> out;
    ExactRatio best(1);
    out.push_back({1, best});
    for (std::uint64_t m = 2; m <= limit; ++m) {
        auto r = ratio_psi_over_n(sieve.factorize(static_cast<std::uint32_t>(m)), t);
        const bool wins = mode == ChampionMode::strict ? r > best : r >= best;
        if (wins) {
            best = r;
            out.push_back({m, std::move(r)});
        }
    }
    return out;
}

ReductionReport reduction_check(std::uint64_t limit, int t) {
    if (t < 2) throw DomainError("t must be >= 2");
    if (limit < 6) throw DomainError("reduction check needs limit >= 6");
    if (limit > std::numeric_limits<std::uint32_t>::max() - 1)
        throw DomainError("reduction check limit too large for the factor sieve");

    const SmallestFactorSieve sieve(static_cast<std::uint32_t>(limit));
    ReductionReport rep;
    rep.worst_relative_gap = std::numeric_limits<double>::infinity();

    // Current primorial N_n (n >= 2) and the next prime p_{n+1}.
    std::uint64_t primorial = 6;
    std::uint64_t next_prime = 5;
    ExactRatio primorial_ratio = ratio_psi_over_n(sieve.factorize(6), t);
    double primorial_r = r_t(primorial_ratio, primorial);

    for (std::uint64_t m = 7; m <= limit; ++m) {
        if (m == primorial * next_prime) {
            primorial = m;
            primorial_ratio = ratio_psi_over_n(sieve.factorize(static_cast<std::uint32_t>(m)), t);
            primorial_r = r_t(primorial_ratio, primorial);
            do {
                ++next_prime;
            } while (sieve.smallest_factor(static_cast<std::uint32_t>(next_prime)) != next_prime);
            continue;
        }
        const auto ratio = ratio_psi_over_n(sieve.factorize(static_cast<std::uint32_t>(m)), t);
        ++rep.checked;
        const double rm = r_t(ratio, m);
        const double gap = (primorial_r - rm) / primorial_r;
        if (gap < rep.worst_relative_gap) {
            rep.worst_relative_gap = gap;
            rep.worst_at = m;
        }
        if (ratio > primorial_ratio || !(rm < primorial_r)) {
            if (rep.holds) rep.witness = m;
            rep.holds = false;
        }
    }
    return rep;
}

}  // namespace dpsi
