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

// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "l1coh/cli.hpp"
#include "test_util.hpp"

using namespace l1coh;
using namespace l1coh::testing;

namespace {

constexpr double kClosedFormTol = 1e-10;
constexpr double kSlackTol = 1e-9;
constexpr double kOracleTol = 1e-8;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += "FAILED " + what;
        }
    }
    void note(const std::string &s) {
        if (!detail.empty()) detail += "; ";
        detail += s;
    }
};

std::string sci(double x) { return cli::detail::fmt("%.3e", x); }

const InequalityResult &find(const std::vector<InequalityResult> &rs, const std::string &name) {
    for (const auto &r : rs) {
        if (r.name == name) return r;
    }
    throw Error("missing result " + name);
}

double sweep_error(Family f, std::size_t k, bool &thm3_everywhere) {
    double err = 0.0;
    thm3_everywhere = true;
    for (const auto &row : family_sweep(f, family_grid(f, k), kSlackTol)) {
        err = std::max(err, row.max_abs_error());
        if (!find(row.suite, "thm3").holds) thm3_everywhere = false;
    }
    return err;
}

Outcome ghz_reproduction() {
    Outcome o;
    auto psi = ghz(kPi / 4);
    auto q = numeric_quantities(psi);
    o.require(std::abs(q.c123 - 1.0) < kClosedFormTol, "C123 = 1");
    o.require(std::max({q.c12, q.c13, q.c23}) < kClosedFormTol, "C12 = C13 = C23 = 0");
    o.require(std::abs(q.tau - 1.0) < kClosedFormTol, "tau = 1");
    double slack = verify_theorem3(psi, kSlackTol).slack;
    o.require(std::abs(slack) < kClosedFormTol, "thm3 equality");
    bool thm3 = true;
    double err = sweep_error(Family::Ghz, 64, thm3);
    o.require(err < kClosedFormTol, "64-point sweep within 1e-10");
    o.note("thm3 slack " + sci(slack) + ", sweep max err " + sci(err));
    return o;
}

Outcome w_reproduction() {
    Outcome o;
    bool thm3 = true;
    double err = sweep_error(Family::W, 32, thm3);
    o.require(err < kClosedFormTol, "32x32 sweep within 1e-10");
    o.require(thm3, "thm3 everywhere");
    o.note("max err " + sci(err));
    return o;
}

Outcome conjecture_refutation() {
    Outcome o;
    auto rs = run_suite(two_term(kPi / 4), kSlackTol);
    const auto &eq4 = find(rs, "eq4-pivot1");
    const auto &thm1 = find(rs, "thm1");
    o.require(std::abs(eq4.lhs - 1.0) < kClosedFormTol, "C123 = 1");
    o.require(std::abs(eq4.rhs - 2.0) < kClosedFormTol, "C12 + C13 = 2");
    o.require(!eq4.holds, "conjecture violated");
    o.require(std::abs(thm1.slack) < kClosedFormTol && thm1.holds, "thm1 equality");
    o.note("C123 " + cli::detail::fmt("%.12g", eq4.lhs) + ", C12+C13 " + cli::detail::fmt("%.12g", eq4.rhs) +
           ", thm1 slack " + sci(thm1.slack));
    return o;
}

Outcome proved_bounds_three_qubit() {
    Outcome o;
    const LocalDims dims{2, 2, 2};
    std::size_t violations = 0;
    double worst = INFINITY;
    for (std::uint64_t s = 0; s < 10000; ++s) {
        for (const AnyState &state :
             {AnyState(sample_haar_pure(dims, s)), AnyState(sample_ginibre_mixed(dims, 1 + s % 8, s))}) {
            auto p = coherence_profile(as_density(state));
            for (const auto &r : {verify_theorem1(p, kSlackTol), verify_singles_sum(p, kSlackTol),
                                  verify_marginal_split(p, 1, kSlackTol), verify_marginal_split(p, 2, kSlackTol),
                                  verify_marginal_split(p, 3, kSlackTol)}) {
                if (!r.holds) ++violations;
                worst = std::min(worst, r.slack);
            }
        }
    }
    o.require(violations == 0 && worst >= -kSlackTol, "zero violations");
    o.note("2x10^4 states, min slack " + sci(worst) + ", violations " + std::to_string(violations));
    return o;
}

Outcome corollary_higher_n() {
    Outcome o;
    for (const LocalDims &dims : {LocalDims{2, 2, 2, 2}, LocalDims{2, 2, 2, 2, 2}, LocalDims{3, 3, 3}, LocalDims{2, 3, 4}}) {
        double worst = INFINITY;
        std::size_t violations = 0;
        for (std::uint64_t s = 0; s < 1000; ++s) {
            auto rho = random_state(dims, s);
            auto p = coherence_profile(rho);
            for (std::size_t m = 1; m <= dims.parties(); ++m) {
                auto r = verify_corollary1(p, m, kSlackTol);
                if (!r.holds) ++violations;
                worst = std::min(worst, r.slack);
            }
        }
        o.require(violations == 0, "dims (" + dims.str() + ")");
        o.note("(" + dims.str() + ") min slack " + sci(worst));
    }
    return o;
}

Outcome tangle_oracle() {
    Outcome o;
    double max_diff = 0.0;
    double worst_gap = INFINITY;
    for (std::uint64_t s = 0; s < 1000; ++s) {
        auto psi = sample_haar_pure(LocalDims{2, 2, 2}, s);
        double tau = three_tangle(psi).tau;
        max_diff = std::max(max_diff, std::abs(tau - ckw_tangle_oracle(psi)));
        worst_gap = std::min(worst_gap, pure_pair_bound_residual(psi) - tau);
    }
    o.require(max_diff < kOracleTol, "formula vs CKW < 1e-8");
    o.require(worst_gap >= -kSlackTol, "D'/2 >= tau");
    o.note("max diff " + sci(max_diff) + ", min D'/2 - tau " + sci(worst_gap));
    return o;
}

Outcome proof_residual() {
    Outcome o;
    double worst_upper = INFINITY;
    double worst_lower = INFINITY;
    for (std::uint64_t s = 0; s < 10000; ++s) {
        auto rho = random_state(LocalDims{2, 2, 2}, s);
        auto p = coherence_profile(rho);
        double gap = 2 * p.full() - (p.at({1, 2}) + p.at({1, 3}) + p.at({2, 3}));
        double d = pair_bound_residual(rho);
        worst_upper = std::min(worst_upper, gap - d);
        worst_lower = std::min(worst_lower, d);
    }
    o.require(worst_upper >= -kSlackTol, "gap >= D");
    o.require(worst_lower >= -kSlackTol, "D >= 0");
    o.note("min (gap - D) " + sci(worst_upper) + ", min D " + sci(worst_lower));
    return o;
}

Outcome search_sanity() {
    Outcome o;
    const LocalDims dims{2, 2, 2};
    auto thm1 = minimize_slack("thm1", dims, 50, 1);
    o.require(thm1.best_value <= 1e-6, "thm1 slack <= 1e-6");
    auto eq4 = minimize_slack("eq4-pivot1", dims, 50, 1);
    o.require(eq4.best_value <= -0.9, "eq4 slack <= -0.9");
    double worst = thm1.best_value;
    for (const char *obj : {"thm2", "cor1-m1", "cor1-m2", "cor1-m3", "thm3", "eq10", "eq3", "eq5-single1",
                            "eq5-single2", "eq5-single3"}) {
        worst = std::min(worst, minimize_slack(obj, dims, 50, 1).best_value);
    }
    o.require(worst >= -kSlackTol, "no proved bound below -1e-9");
    o.note("thm1 " + sci(thm1.best_value) + ", eq4 " + cli::detail::fmt("%.6f", eq4.best_value) +
           ", min proved " + sci(worst));
    return o;
}

Outcome plumbing() {
    Outcome o;
    auto dir = std::filesystem::temp_directory_path();
    for (std::uint64_t s = 0; s < 20; ++s) {
        std::vector<AnyState> states{AnyState(sample_haar_pure(LocalDims{2, 2, 2}, s)),
                                     AnyState(sample_ginibre_mixed(LocalDims{2, 3, 2}, 1 + s % 12, s))};
        for (const auto &state : states) {
            auto path = (dir / "l1coh_acceptance_state.json").string();
            write_state_file(path, state);
            AnyState back = read_state_file(path);
            o.require(state_to_json(back) == state_to_json(state), "state file bit-stable");
            o.require(run_suite(back) == run_suite(state), "re-verify identical");
            std::stringstream csv;
            write_csv(csv, run_suite(back), false);
            std::string line;
            while (std::getline(csv, line)) {
                auto row = parse_csv_row(line);
                o.require(recheck(row) == row, "CSV round-trip");
            }
        }
    }
    std::stringstream a, b;
    cli::detail::SampleArgs args{{2, 2, 2}, 100, 7, true, 0, ""};
    cli::detail::sample_ensemble(args, &a);
    cli::detail::sample_ensemble(args, &b);
    o.require(!a.str().empty() && a.str() == b.str(), "same-seed ensembles identical");
    auto s1 = minimize_slack("thm1", LocalDims{2, 2, 2}, 2, 11);
    auto s2 = minimize_slack("thm1", LocalDims{2, 2, 2}, 2, 11);
    o.require(s1.best_value == s2.best_value && s1.best_state.amps() == s2.best_state.amps(),
              "same-seed search identical");
    if (o.pass) o.note("state files, CSV rows and seeded runs reproduce exactly");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 GHZ reproduction", ghz_reproduction},
        {"AC2 W reproduction", w_reproduction},
        {"AC3 conjecture refutation", conjecture_refutation},
        {"AC4 proved bounds, 3 qubits", proved_bounds_three_qubit},
        {"AC5 higher n and qudits", corollary_higher_n},
        {"AC6 tangle oracle equivalence", tangle_oracle},
        {"AC7 proof-residual consistency", proof_residual},
        {"AC8 search sanity", search_sanity},
        {"AC9 plumbing", plumbing},
    };
    int failed = 0;
    for (const auto &[name, run] : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %-32s %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
        if (!o.pass) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
