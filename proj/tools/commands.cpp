#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dpsi/bounds.hpp"
#include "dpsi/errors.hpp"
#include "dpsi/primorial.hpp"
#include "dpsi/robin.hpp"
#include "output.hpp"

namespace dpsi::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    Format format = Format::csv;
    std::string output_path;
    std::uint64_t sieve_limit = std::uint64_t{1} << 17;
    std::uint64_t sieve_cap = std::uint64_t{1} << 28;

    int t_min = 3;
    int t_max = 7;
    bool floor_n0 = false;

    std::uint64_t limit = 0;
    int t = 2;
    bool weak = false;

    std::uint64_t from = kLargestKnownViolator + 1;
    std::uint64_t to = 0;
    std::uint64_t segment_size = ScanOptions{}.segment_size;

    std::size_t n_max = 0;
    std::size_t every = 1;

    std::size_t us_n_max = 10000;
    int bounds_t_max = 10;
    std::uint64_t x_max = 1000000;
    std::size_t samples = 500;
    std::uint64_t seed = 20231017;

    std::vector<std::size_t> indices{10, 100, 1000, 10000};
};

void emit(const Table& table, const RunConfig& cfg, std::ostream& out) {
    if (cfg.output_path.empty()) {
        write(table, cfg.format, out);
        return;
    }
    std::ofstream file(cfg.output_path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file " + cfg.output_path);
    write(table, cfg.format, file);
}

PrimeTable table_for(std::uint64_t limit, const RunConfig& cfg) {
    if (limit > cfg.sieve_cap)
        throw CoverageError("needs a sieve to " + std::to_string(limit) + " but --sieve-cap is " +
                                std::to_string(cfg.sieve_cap),
                            limit);
    return PrimeTable(std::max<std::uint64_t>(limit, 2));
}

int cmd_table1(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.t_min > cfg.t_max) throw UsageError("--t-min must not exceed --t-max");
    const auto mode = cfg.floor_n0 ? FloorMode::floored_at_n0 : FloorMode::unconstrained;

    Table table{{"t", "n1", "p_n1", "mantissa", "exponent10", "margin"}, {}};
    std::uint64_t limit = std::min(cfg.sieve_limit, cfg.sieve_cap);
    std::optional<PrimeTable> primes;
    for (int t = cfg.t_min; t <= cfg.t_max; ++t) {
        for (;;) {
            if (!primes || primes->limit() != limit) primes.emplace(std::max<std::uint64_t>(limit, 2));
            try {
                const auto r = n1_search(t, mode, *primes);
                const auto mag = primorial_magnitude(r.n1, *primes);
                table.rows.push_back({std::int64_t{t}, std::uint64_t{r.n1}, r.p_n1, mag.mantissa,
                                      std::int64_t{mag.exponent10}, r.margin});
                if (!r.stays_satisfied)
                    err << "warning: criterion for t = " << t << " fails again within "
                        << kN1Lookahead << " indices of n1\n";
                break;
            } catch (const CoverageError& e) {
                if (limit >= cfg.sieve_cap) {
                    err << "error: " << e.what() << "\nhint: the sieve is capped at "
                        << cfg.sieve_cap << "; raise --sieve-cap";
                    if (e.needed() > 0) err << " (at least " << e.needed() << ")";
                    err << "\n";
                    emit(table, cfg, out);
                    return kExitCoverage;
                }
                limit = std::min(cfg.sieve_cap, std::max(2 * limit, e.needed()));
            }
        }
    }
    emit(table, cfg, out);
    return kExitOk;
}

int cmd_champions(const RunConfig& cfg, std::ostream& out) {
    if (cfg.limit > 100000000) throw UsageError("--limit is capped at 1e8");
    const auto champs =
        champion_scan(cfg.limit, cfg.t, cfg.weak ? ChampionMode::weak : ChampionMode::strict);
    Table table{{"m", "ratio", "ratio_approx"}, {}};
    for (const auto& c : champs) table.rows.push_back({c.m, c.ratio.str(), c.ratio.to_double()});
    emit(table, cfg, out);
    return kExitOk;
}

int cmd_robin_scan(const RunConfig& cfg, std::ostream& out) {
    if (cfg.from > cfg.to) throw UsageError("--from must not exceed --to");
    const auto primes = table_for(isqrt(cfg.to) + 1, cfg);
    ScanOptions opts;
    opts.segment_size = cfg.segment_size;
    const auto violators = robin_scan(cfg.from, cfg.to, primes, opts);

    Table table{{"n", "sigma", "threshold", "margin"}, {}};
    bool falsified = false;
    for (const auto& v : violators) {
        table.rows.push_back({v.n, v.sigma.get_str(), v.threshold, v.margin});
        if (v.n > kLargestKnownViolator) falsified = true;
    }
    emit(table, cfg, out);
    return falsified ? kExitFalsified : kExitOk;
}

int cmd_ratio(const RunConfig& cfg, std::ostream& out) {
    if (cfg.every == 0) throw UsageError("--every must be positive");
    const auto primes = table_for(sieve_limit_for_index(cfg.n_max), cfg);
    const int ts[] = {cfg.t};
    const double limit = kExpEulerGamma / zeta(cfg.t).value;

    Table table{{"n", "p_n", "r_t", "limit", "deviation"}, {}};
    auto point = PrimorialPoint::at(1, ts, primes);
    while (point.index() < cfg.n_max) {
        point = point.advance(primes);
        const auto n = point.index();
        if (n % cfg.every != 0 && n != 2 && n != cfg.n_max) continue;
        const double r = r_t(point, cfg.t);
        table.rows.push_back({std::uint64_t{n}, point.prime(), r, limit, r / limit - 1.0});
    }
    emit(table, cfg, out);
    return kExitOk;
}

int cmd_verify_bounds(const RunConfig& cfg, std::ostream& out) {
    const std::size_t us_n = std::min(cfg.us_n_max, cfg.n_max);
    const std::uint64_t limit = std::max(cfg.x_max, sieve_limit_for_index(cfg.n_max));
    const auto primes = table_for(limit, cfg);

    const auto xs = rs_sample_points(cfg.x_max, cfg.samples, cfg.seed);
    std::vector<SuiteResult> results;
    results.push_back(rs_suite(primes, xs));
    results.push_back(us_suite(primes, 2, cfg.bounds_t_max, us_n));
    results.push_back(robmod_suite(primes, cfg.n_max));
    results.push_back(fonda_suite(primes, 3, 7, cfg.n_max));

    Table table{{"lemma", "status", "checks", "worst_margin", "worst_at", "rechecked", "note"}, {}};
    bool failed = false;
    for (const auto& r : results) {
        const bool ran = r.status != SuiteStatus::skipped;
        table.rows.push_back({r.name, std::string(to_string(r.status)), r.checks,
                              ran ? Cell{r.worst_margin} : Cell{}, r.worst_at, r.rechecked, r.note});
        if (r.status == SuiteStatus::fail) failed = true;
    }
    emit(table, cfg, out);
    return failed ? kExitFalsified : kExitOk;
}

int cmd_admissible_t(const RunConfig& cfg, std::ostream& out) {
    std::size_t top = 2;
    for (const auto n : cfg.indices) top = std::max(top, n);
    const auto primes = table_for(sieve_limit_for_index(top), cfg);

    Table table{{"n", "p_n", "admissible_t", "margin"}, {}};
    for (const auto n : cfg.indices) {
        const auto t = admissible_t(n, primes);
        if (t)
            table.rows.push_back({std::uint64_t{n}, primes.nth_prime(n), std::int64_t{*t},
                                  criterion(*t, n, primes).margin});
        else
            table.rows.push_back({std::uint64_t{n}, primes.nth_prime(n), Cell{},
                                  criterion(2, n, primes).margin});
    }
    emit(table, cfg, out);
    return kExitOk;
}

void add_output_options(CLI::App* sub, RunConfig& cfg) {
    static const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};
    sub->add_option("--format", cfg.format, "Output format (csv|json)")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--output,-o", cfg.output_path, "Write to file instead of stdout");
    sub->add_option("--sieve-limit", cfg.sieve_limit, "Initial sieve bound")
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{0xFFFFFFFF}));
    sub->add_option("--sieve-cap", cfg.sieve_cap, "Largest sieve bound allowed")
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{0xFFFFFFFF}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Dedekind psi toolkit: primorial bounds and Robin checks", "dpsi"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* table1 = app.add_subcommand("table1", "Least primorial index n_1(t) where the criterion holds");
    table1->add_option("--t-min", cfg.t_min)->check(CLI::Range(2, kMaxT));
    table1->add_option("--t-max", cfg.t_max)->check(CLI::Range(2, kMaxT));
    table1->add_flag("--floor-n0", cfg.floor_n0, "Start the search at n_0 = 2263");

    auto* champions = app.add_subcommand("champions", "Left-to-right maxima of Psi_t(m)/m");
    champions->add_option("--limit", cfg.limit)->required()->check(CLI::PositiveNumber);
    champions->add_option("--t", cfg.t)->check(CLI::Range(2, kMaxT));
    champions->add_flag("--weak", cfg.weak, "Count ties as champions");

    auto* scan = app.add_subcommand("robin-scan", "Violators of sigma(n) < e^gamma n log log n");
    scan->add_option("--from", cfg.from)->check(CLI::Range(std::uint64_t{3}, std::uint64_t{1} << 53));
    scan->add_option("--to", cfg.to)->required()->check(CLI::Range(std::uint64_t{3}, std::uint64_t{1} << 53));
    scan->add_option("--segment-size", cfg.segment_size)->check(CLI::PositiveNumber);

    auto* ratio = app.add_subcommand("ratio", "R_t(N_n) against its limit e^gamma/zeta(t)");
    ratio->add_option("--t", cfg.t)->check(CLI::Range(2, kMaxT));
    ratio->add_option("--n-max", cfg.n_max)->required()->check(CLI::Range(std::size_t{2}, std::size_t{50000000}));
    ratio->add_option("--every", cfg.every, "Emit every k-th row (first and last always)");

    auto* verify = app.add_subcommand("verify-bounds", "Run the explicit lemma inequality suites");
    cfg.n_max = 100000;
    verify->add_option("--n-max", cfg.n_max)->check(CLI::Range(std::size_t{2}, std::size_t{50000000}));
    verify->add_option("--t-max", cfg.bounds_t_max, "Largest t for the zeta tail suite")->check(CLI::Range(2, kMaxT));
    verify->add_option("--us-n-max", cfg.us_n_max, "Largest n for the zeta tail suite");
    verify->add_option("--x-max", cfg.x_max, "Largest x for the Mertens product suite")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 31));
    verify->add_option("--samples", cfg.samples, "Random x samples for the Mertens suite");
    verify->add_option("--seed", cfg.seed);

    auto* adm = app.add_subcommand("admissible-t", "Largest t whose criterion holds at each index");
    adm->add_option("--n", cfg.indices, "Primorial indices")->check(CLI::Range(std::size_t{2}, std::size_t{50000000}));

    for (auto* sub : {table1, champions, scan, ratio, verify, adm}) add_output_options(sub, cfg);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*table1) return cmd_table1(cfg, out, err);
        if (*champions) return cmd_champions(cfg, out);
        if (*scan) return cmd_robin_scan(cfg, out);
        if (*ratio) return cmd_ratio(cfg, out);
        if (*verify) return cmd_verify_bounds(cfg, out);
        if (*adm) return cmd_admissible_t(cfg, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CoverageError& e) {
        err << "error: " << e.what() << "\n";
        if (e.needed() > 0) err << "hint: rerun with --sieve-cap >= " << e.needed() << "\n";
        return kExitCoverage;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return kExitCoverage;
    } catch (const IndexError& e) {
        err << "error: " << e.what() << "\n";
        return kExitCoverage;
    }
    return kExitUsage;
}

}  // namespace dpsi::cli
