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
#include <cstdlib>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "l1coh/inequalities.hpp"

namespace l1coh {

// CSV row per result: name,lhs,rhs,slack,holds,tolerance. Reals use 17
// significant digits, which round-trips every double.

inline constexpr const char *kCsvHeader = "name,lhs,rhs,slack,holds,tolerance";

inline std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string to_csv_row(const InequalityResult &r) {
    return r.name + ',' + format_real(r.lhs) + ',' + format_real(r.rhs) + ',' + format_real(r.slack) + ',' +
           (r.holds ? "true" : "false") + ',' + format_real(r.tolerance);
}

namespace detail {

inline std::vector<std::string> split_csv(const std::string &line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

inline double parse_real(const std::string &s) {
    char *end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) {
        throw InvariantViolation("format", "not a real number: \"" + s + "\"");
    }
    return v;
}

}  // namespace detail

inline InequalityResult parse_csv_row(const std::string &line) {
    auto cells = detail::split_csv(line);
    if (cells.size() != 6) {
        throw InvariantViolation("format", "expected 6 CSV fields, got " + std::to_string(cells.size()));
    }
    if (cells[4] != "true" && cells[4] != "false") {
        throw InvariantViolation("format", "holds must be true or false, got \"" + cells[4] + "\"");
    }
    InequalityResult r;
    r.name = cells[0];
    r.lhs = detail::parse_real(cells[1]);
    r.rhs = detail::parse_real(cells[2]);
    r.slack = detail::parse_real(cells[3]);
    r.holds = cells[4] == "true";
    r.tolerance = detail::parse_real(cells[5]);
    return r;
}

/// Recomputes slack and the holds flag from a parsed row.
inline InequalityResult recheck(const InequalityResult &r) { return make_result(r.name, r.lhs, r.rhs, r.tolerance); }

inline void write_csv(std::ostream &out, const std::vector<InequalityResult> &results, bool header = true) {
    if (header) out << kCsvHeader << '\n';
    for (const auto &r : results) out << to_csv_row(r) << '\n';
}

// ---------------------------------------------------------------------------
// Ensemble aggregation
// ---------------------------------------------------------------------------

struct VerifierStats {
    std::string name;
    std::size_t count = 0;
    std::size_t violations = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    std::size_t argmin_trial = 0;  // trial index of the extremal state
};

/// Aggregate over a random ensemble. Trial i was sampled with seed + i.
struct TrialReport {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<VerifierStats> verifiers;  // first-seen registry order

    void add(std::size_t trial, const std::vector<InequalityResult> &results) {
        ++trials;
        for (const auto &r : results) {
            VerifierStats &s = stats_for(r.name);
            ++s.count;
            if (!r.holds) ++s.violations;
            if (r.slack < s.min_slack || (r.slack == s.min_slack && trial < s.argmin_trial)) {
                s.min_slack = r.slack;
                s.argmin_trial = trial;
            }
        }
    }

    const VerifierStats *find(const std::string &name) const {
        for (const auto &s : verifiers) {
            if (s.name == name) return &s;
        }
        return nullptr;
    }

    /// Violations of every bound except the known-false conjecture.
    std::size_t proved_violations() const {
        std::size_t v = 0;
        for (const auto &s : verifiers) {
            if (!is_conjecture(s.name)) v += s.violations;
        }
        return v;
    }

   private:
    VerifierStats &stats_for(const std::string &name) {
        for (auto &s : verifiers) {
            if (s.name == name) return s;
        }
        verifiers.push_back(VerifierStats{name});
        return verifiers.back();
    }
};

// AGG,name,count,violations,min_slack,argmin_seed
inline std::string to_agg_row(const VerifierStats &s, std::uint64_t seed) {
    return "AGG," + s.name + ',' + std::to_string(s.count) + ',' + std::to_string(s.violations) + ',' +
           format_real(s.min_slack) + ',' + std::to_string(seed + s.argmin_trial);
}

}  // namespace l1coh
