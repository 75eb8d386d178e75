// Copyright 2026 The l1coh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "l1coh/families.hpp"
#include "l1coh/random.hpp"
#include "l1coh/report.hpp"
#include "l1coh/search.hpp"
#include "l1coh/state_io.hpp"
#include "l1coh/tangle.hpp"

namespace l1coh::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

template <class... Args>
std::string fmt(const char *format, Args... args) {
    int n = std::snprintf(nullptr, 0, format, args...);
    std::string s(static_cast<std::size_t>(n), '\0');
    std::snprintf(s.data(), s.size() + 1, format, args...);
    return s;
}

inline void print_results(std::ostream &out, const std::vector<InequalityResult> &results) {
    out << fmt("%-12s %22s %22s %22s  %s\n", "name", "lhs", "rhs", "slack", "holds");
    for (const auto &r : results) {
        const char *flag = r.holds ? "yes" : (is_conjecture(r.name) ? "no (conjecture)" : "NO");
        out << fmt("%-12s %22.15g %22.15g %22.15g  %s\n", r.name.c_str(), r.lhs, r.rhs, r.slack, flag);
    }
}

inline std::ofstream open_csv(const std::string &path) {
    std::ofstream f(path);
    if (!f) throw Error("cannot open " + path + " for writing");
    return f;
}

struct VerifyArgs {
    std::string state_file;
    double tolerance = Tolerance::ineq;
    std::string csv;
};

inline int run_verify(const VerifyArgs &a, std::ostream &out) {
    AnyState state = read_state_file(a.state_file);
    auto results = run_suite(state, a.tolerance);
    out << "state: " << (std::holds_alternative<PureState>(state) ? "pure" : "density") << ", dims ("
        << dims_of(state).str() << ")\n";
    print_results(out, results);
    if (!a.csv.empty()) {
        auto f = open_csv(a.csv);
        write_csv(f, results);
    }
    bool ok = proved_bounds_hold(results);
    out << (ok ? "all proved bounds hold\n" : "PROVED BOUND VIOLATED\n");
    return ok ? kExitOk : kExitViolation;
}

struct SweepArgs {
    std::string family;
    std::size_t points = 64;
    std::string csv;
};

inline int run_sweep(const SweepArgs &a, std::ostream &out) {
    Family f = parse_family(a.family);
    auto rows = family_sweep(f, family_grid(f, a.points));
    double max_err = 0.0;
    double min_thm3 = INFINITY;
    double min_eq4 = INFINITY;
    std::size_t proved_fail = 0;
    for (const auto &row : rows) {
        max_err = std::max(max_err, row.max_abs_error());
        if (!proved_bounds_hold(row.suite)) ++proved_fail;
        for (const auto &r : row.suite) {
            if (r.name == "thm3") min_thm3 = std::min(min_thm3, r.slack);
            if (r.name == "eq4-pivot1") min_eq4 = std::min(min_eq4, r.slack);
        }
    }
    out << fmt("family %s: %zu grid points\n", a.family.c_str(), rows.size());
    out << fmt("max |numeric - closed form| over C123,C12,C13,C23,tau: %.3e\n", max_err);
    out << fmt("min thm3 slack: %.17g\n", min_thm3);
    out << fmt("min eq4-pivot1 slack: %.17g\n", min_eq4);
    out << fmt("points with a proved-bound violation: %zu\n", proved_fail);

    if (!a.csv.empty()) {
        auto csv = open_csv(a.csv);
        csv << "family,p1,p2,C123,C123_cf,C12,C12_cf,C13,C13_cf,C23,C23_cf,tau,tau_cf,thm1_slack,thm3_slack,"
               "eq10_slack,eq4_pivot1_slack,proved_hold\n";
        for (const auto &row : rows) {
            auto slack = [&](const char *name) -> double {
                for (const auto &r : row.suite) {
                    if (r.name == name) return r.slack;
                }
                return NAN;
            };
            const auto &p = row.point.params;
            const auto &n = row.numeric;
            const auto &c = row.closed;
            csv << a.family << ',' << format_real(p[0]) << ',' << (p.size() > 1 ? format_real(p[1]) : "") << ','
                << format_real(n.c123) << ',' << format_real(c.c123) << ',' << format_real(n.c12) << ','
                << format_real(c.c12) << ',' << format_real(n.c13) << ',' << format_real(c.c13) << ','
                << format_real(n.c23) << ',' << format_real(c.c23) << ',' << format_real(n.tau) << ','
                << format_real(c.tau) << ',' << format_real(slack("thm1")) << ',' << format_real(slack("thm3"))
                << ',' << format_real(slack("eq10")) << ',' << format_real(slack("eq4-pivot1")) << ','
                << (proved_bounds_hold(row.suite) ? "true" : "false") << '\n';
        }
    }
    return kExitOk;
}

struct SampleArgs {
    std::vector<std::size_t> dims;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    bool mixed = false;
    std::size_t rank = 0;  // 0: full rank
    std::string csv;
};

inline TrialReport sample_ensemble(const SampleArgs &a, std::ostream *csv) {
    LocalDims dims(a.dims);
    const std::size_t rank = a.rank == 0 ? dims.total() : a.rank;
    if (a.mixed && (rank < 1 || rank > dims.total())) {
        throw DomainError("--rank must be in [1, " + std::to_string(dims.total()) + "]");
    }
    TrialReport report;
    report.seed = a.seed;
    if (csv) *csv << kCsvHeader << '\n';
    for (std::size_t i = 0; i < a.trials; ++i) {
        const std::uint64_t s = a.seed + i;
        AnyState state = a.mixed ? AnyState(sample_ginibre_mixed(dims, rank, s)) : AnyState(sample_haar_pure(dims, s));
        auto results = run_suite(state);
        report.add(i, results);
        if (csv) write_csv(*csv, results, false);
    }
    if (csv) {
        for (const auto &v : report.verifiers) *csv << to_agg_row(v, report.seed) << '\n';
    }
    return report;
}

inline int run_sample(const SampleArgs &a, std::ostream &out) {
    std::ofstream csv;
    if (!a.csv.empty()) csv = open_csv(a.csv);
    TrialReport report = sample_ensemble(a, a.csv.empty() ? nullptr : &csv);
    out << fmt("%zu %s trials, dims (%s), seeds %llu..%llu\n", report.trials, a.mixed ? "mixed" : "pure",
               LocalDims(a.dims).str().c_str(), static_cast<unsigned long long>(a.seed),
               static_cast<unsigned long long>(a.seed + (a.trials ? a.trials - 1 : 0)));
    out << fmt("%-12s %8s %10s %24s %12s\n", "name", "count", "violations", "min slack", "argmin seed");
    for (const auto &v : report.verifiers) {
        out << fmt("%-12s %8zu %10zu %24.17g %12llu\n", v.name.c_str(), v.count, v.violations, v.min_slack,
                   static_cast<unsigned long long>(a.seed + v.argmin_trial));
    }
    out << fmt("proved-bound violations: %zu\n", report.proved_violations());
    return kExitOk;
}

struct SearchArgs {
    std::string objective;
    std::vector<std::size_t> dims{2, 2, 2};
    std::size_t restarts = 50;
    std::uint64_t seed = 0;
    std::size_t iterations = 200;
    std::size_t cycles = 10;
    std::string state_out;
};

inline int run_search(const SearchArgs &a, std::ostream &out) {
    SimplexOptions opt;
    opt.max_iterations = a.iterations;
    opt.cycles = a.cycles;
    SearchOutcome res = minimize_slack(a.objective, LocalDims(a.dims), a.restarts, a.seed, opt);
    out << fmt("objective %s, dims (%s), %zu restarts, seed %llu\n", res.objective.c_str(),
               LocalDims(a.dims).str().c_str(), a.restarts, static_cast<unsigned long long>(res.seed));
    out << fmt("best slack: %.17g\n", res.best_value);
    out << fmt("evaluations: %zu\n", res.evaluations);
    if (!a.state_out.empty()) {
        write_state_file(a.state_out, res.best_state);
        out << "best state written to " << a.state_out << '\n';
    }
    return kExitOk;
}

struct OracleArgs {
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
};

inline int run_oracle(const OracleArgs &a, std::ostream &out) {
    const LocalDims dims{2, 2, 2};
    double max_diff = 0.0;
    double max_tau = 0.0;
    double min_residual_gap = INFINITY;
    for (std::size_t i = 0; i < a.trials; ++i) {
        PureState psi = sample_haar_pure(dims, a.seed + i);
        double tau = three_tangle(psi).tau;
        max_diff = std::max(max_diff, std::abs(tau - ckw_tangle_oracle(psi)));
        max_tau = std::max(max_tau, tau);
        min_residual_gap = std::min(min_residual_gap, pure_pair_bound_residual(psi) - tau);
    }
    out << fmt("%zu Haar pure 3-qubit states, seeds %llu..%llu\n", a.trials, static_cast<unsigned long long>(a.seed),
               static_cast<unsigned long long>(a.seed + (a.trials ? a.trials - 1 : 0)));
    out << fmt("max |tau_formula - tau_ckw|: %.3e\n", max_diff);
    out << fmt("max tau: %.17g\n", max_tau);
    out << fmt("min (D'/2 - tau): %.17g\n", min_residual_gap);
    return kExitOk;
}

}  // namespace detail

/// Batch driver. Exit codes: 0 ok, 1 proved bound violated (verify only),
/// 2 malformed input or flags.
inline int cli_main(int argc, const char *const *argv, std::ostream &out = std::cout,
                    std::ostream &err = std::cerr) {
    CLI::App app{"l1-norm coherence trade-off verifier"};
    app.require_subcommand(1);

    detail::VerifyArgs verify;
    auto *v = app.add_subcommand("verify", "run every applicable bound on a state file");
    v->add_option("statefile", verify.state_file, "JSON state file")->required();
    v->add_option("--tolerance", verify.tolerance, "absolute slack tolerance")->check(CLI::NonNegativeNumber);
    v->add_option("--csv", verify.csv, "write results as CSV");

    detail::SweepArgs sweep;
    auto *sw = app.add_subcommand("sweep", "closed-form family sweep");
    sw->add_option("family", sweep.family, "ghz, w or two-term")->required()->check(
        CLI::IsMember({"ghz", "w", "two-term"}));
    sw->add_option("--points", sweep.points, "grid points per parameter")->check(CLI::PositiveNumber);
    sw->add_option("--csv", sweep.csv, "write the per-point table as CSV");

    detail::SampleArgs sample;
    auto *sa = app.add_subcommand("sample", "random-ensemble property run");
    sa->add_option("--dims", sample.dims, "local dimensions, e.g. 2,2,2")->required()->delimiter(',');
    sa->add_option("--trials", sample.trials, "number of states")->required();
    sa->add_option("--seed", sample.seed, "first seed; trial i uses seed + i")->required();
    auto *mixed = sa->add_flag("--mixed", sample.mixed, "Ginibre mixed states instead of Haar pure states");
    sa->add_option("--rank", sample.rank, "Ginibre rank (default: full)")->needs(mixed)->check(CLI::PositiveNumber);
    sa->add_option("--csv", sample.csv, "write per-trial rows and AGG rows");

    detail::SearchArgs search;
    auto *se = app.add_subcommand("search", "minimize a verifier's slack over pure states");
    se->add_option("--objective", search.objective, "registry name, e.g. thm1 or eq4-pivot1")->required();
    se->add_option("--restarts", search.restarts, "Haar-random starts")->required()->check(CLI::PositiveNumber);
    se->add_option("--seed", search.seed, "restart r starts from seed + r")->required();
    se->add_option("--dims", search.dims, "local dimensions (default 2,2,2)")->delimiter(',');
    se->add_option("--iterations", search.iterations, "simplex iterations per cycle")->check(CLI::PositiveNumber);
    se->add_option("--cycles", search.cycles, "simplex rebuilds per restart")->check(CLI::PositiveNumber);
    se->add_option("--state-out", search.state_out, "write the best state as a state file");

    detail::OracleArgs oracle;
    auto *orc = app.add_subcommand("oracle", "tangle polynomial vs CKW oracle");
    orc->add_option("--trials", oracle.trials, "number of states")->required();
    orc->add_option("--seed", oracle.seed, "first seed")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        // --help lands here too, with exit code 0.
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (v->parsed()) return detail::run_verify(verify, out);
        if (sw->parsed()) return detail::run_sweep(sweep, out);
        if (sa->parsed()) return detail::run_sample(sample, out);
        if (se->parsed()) return detail::run_search(search, out);
        if (orc->parsed()) return detail::run_oracle(oracle, out);
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace l1coh::cli
