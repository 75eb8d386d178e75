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

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "l1coh/coherence.hpp"
#include "l1coh/inequalities.hpp"
#include "l1coh/tangle.hpp"

namespace l1coh {

// Parameterized three-qubit families with known closed forms:
//   ghz(phi)          = cos(phi)|000> + sin(phi)|111>,                 phi   in [0, 2pi)
//   w(theta, phi)     = sin(theta)cos(phi)|100> + sin(theta)sin(phi)|010>
//                       + cos(theta)|001>,                              theta in [0, pi)
//   two-term(alpha)   = cos(alpha)|000> + sin(alpha)|100>,             alpha in [0, 2pi)

enum class Family { Ghz, W, TwoTerm };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::Ghz: return "ghz";
        case Family::W: return "w";
        case Family::TwoTerm: return "two-term";
    }
    return "?";
}

inline Family parse_family(const std::string &s) {
    if (s == "ghz") return Family::Ghz;
    if (s == "w") return Family::W;
    if (s == "two-term") return Family::TwoTerm;
    throw DomainError("unknown family \"" + s + "\" (expected ghz, w or two-term)");
}

inline std::size_t family_arity(Family f) { return f == Family::W ? 2 : 1; }

/// Coherences and tangle of a three-qubit state.
struct TripleQuantities {
    double c123 = 0.0;
    double c12 = 0.0;
    double c13 = 0.0;
    double c23 = 0.0;
    double tau = 0.0;
};

struct FamilyPoint {
    Family family;
    std::vector<double> params;
    PureState state;
};

namespace detail {

inline void require_in(double x, double hi, const char *what) {
    if (!(x >= 0.0 && x < hi)) {
        throw DomainError(std::string(what) + " = " + std::to_string(x) + " outside [0, " + std::to_string(hi) + ")");
    }
}

}  // namespace detail

inline FamilyPoint make_family_point(Family f, const std::vector<double> &params) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (params.size() != family_arity(f)) {
        throw DomainError(family_name(f) + " takes " + std::to_string(family_arity(f)) + " parameter(s)");
    }
    Vector amps = Vector::Zero(8);
    switch (f) {
        case Family::Ghz: {
            detail::require_in(params[0], two_pi, "phi");
            amps(0b000) = std::cos(params[0]);
            amps(0b111) = std::sin(params[0]);
            break;
        }
        case Family::W: {
            detail::require_in(params[0], std::numbers::pi, "theta");
            detail::require_in(params[1], two_pi, "phi");
            double st = std::sin(params[0]);
            amps(0b100) = st * std::cos(params[1]);
            amps(0b010) = st * std::sin(params[1]);
            amps(0b001) = std::cos(params[0]);
            break;
        }
        case Family::TwoTerm: {
            detail::require_in(params[0], two_pi, "alpha");
            amps(0b000) = std::cos(params[0]);
            amps(0b100) = std::sin(params[0]);
            break;
        }
    }
    return {f, params, PureState(LocalDims{2, 2, 2}, std::move(amps))};
}

/// Closed-form coherences and tangle of a family member.
inline TripleQuantities closed_form(Family f, const std::vector<double> &p) {
    TripleQuantities q;
    switch (f) {
        case Family::Ghz: {
            double s = std::sin(p[0]), c = std::cos(p[0]);
            q.c123 = 2.0 * std::abs(s * c);
            q.tau = 4.0 * std::abs(c * c * s * s);
            break;
        }
        case Family::W: {
            double st = std::sin(p[0]), ct = std::cos(p[0]);
            double sp = std::sin(p[1]), cp = std::cos(p[1]);
            q.c12 = 2.0 * std::abs(st * st * sp * cp);
            q.c13 = 2.0 * std::abs(st * ct * cp);
            q.c23 = 2.0 * std::abs(st * ct * sp);
            q.c123 = q.c12 + q.c13 + q.c23;
            break;
        }
        case Family::TwoTerm: {
            double v = 2.0 * std::abs(std::cos(p[0]) * std::sin(p[0]));
            q.c123 = q.c12 = q.c13 = v;
            break;
        }
    }
    return q;
}

inline TripleQuantities numeric_quantities(const PureState &psi) {
    CoherenceProfile p = coherence_profile(density_from_pure(psi));
    return {p.full(), p.at({1, 2}), p.at({1, 3}), p.at({2, 3}), three_tangle(psi).tau};
}

struct SweepRow {
    FamilyPoint point;
    TripleQuantities numeric;
    TripleQuantities closed;
    std::vector<InequalityResult> suite;

    double max_abs_error() const {
        return std::max({std::abs(numeric.c123 - closed.c123), std::abs(numeric.c12 - closed.c12),
                         std::abs(numeric.c13 - closed.c13), std::abs(numeric.c23 - closed.c23),
                         std::abs(numeric.tau - closed.tau)});
    }
};

/// Uniform grid over the family's domain: k points per parameter,
/// x_i = i * (domain width) / k.
inline std::vector<std::vector<double>> family_grid(Family f, std::size_t k) {
    if (k < 1) throw DomainError("grid needs at least one point per parameter");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<std::vector<double>> grid;
    for (std::size_t i = 0; i < k; ++i) {
        if (f == Family::W) {
            double theta = std::numbers::pi * static_cast<double>(i) / static_cast<double>(k);
            for (std::size_t j = 0; j < k; ++j) {
                grid.push_back({theta, two_pi * static_cast<double>(j) / static_cast<double>(k)});
            }
        } else {
            grid.push_back({two_pi * static_cast<double>(i) / static_cast<double>(k)});
        }
    }
    return grid;
}

inline std::vector<SweepRow> family_sweep(Family f, const std::vector<std::vector<double>> &grid,
                                          double tol = Tolerance::ineq) {
    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    for (const auto &params : grid) {
        FamilyPoint pt = make_family_point(f, params);
        TripleQuantities num = numeric_quantities(pt.state);
        TripleQuantities cf = closed_form(f, params);
        auto suite = run_suite(AnyState(pt.state), tol);
        rows.push_back({std::move(pt), num, cf, std::move(suite)});
    }
    return rows;
}

}  // namespace l1coh
