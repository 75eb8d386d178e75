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

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "l1coh/coherence.hpp"
#include "l1coh/state_io.hpp"
#include "l1coh/subsets.hpp"
#include "l1coh/tangle.hpp"

namespace l1coh {

/// One evaluated bound lhs >= rhs.
struct InequalityResult {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // lhs - rhs
    bool holds = true;   // slack >= -tolerance
    double tolerance = Tolerance::ineq;

    bool operator==(const InequalityResult &) const = default;
};

inline InequalityResult make_result(std::string name, double lhs, double rhs, double tolerance) {
    double slack = lhs - rhs;
    return {std::move(name), lhs, rhs, slack, slack >= -tolerance, tolerance};
}

/// The additive conjecture C123 >= C1p + C1q is known to be false; its
/// violations are reported but never count as failures.
inline bool is_conjecture(std::string_view name) { return name.starts_with("eq4"); }

// ---------------------------------------------------------------------------
// Verifiers over a precomputed coherence profile
// ---------------------------------------------------------------------------

namespace detail {

inline double pair(const CoherenceProfile &p, std::size_t a, std::size_t b) {
    return a < b ? p.at({a, b}) : p.at({b, a});
}

inline void require_party(std::size_t party, std::size_t n, const char *what) {
    if (party < 1 || party > n) {
        throw DomainError(std::string(what) + ": party " + std::to_string(party) + " outside 1.." + std::to_string(n));
    }
}

}  // namespace detail

inline InequalityResult verify_theorem1(const CoherenceProfile &p, double tol = Tolerance::ineq) {
    require_three_qubits(p.dims, "thm1");
    double rhs = (p.at({1, 2}) + p.at({1, 3}) + p.at({2, 3})) / 2.0;
    return make_result("thm1", p.full(), rhs, tol);
}

inline InequalityResult verify_additive_conjecture(const CoherenceProfile &p, std::size_t pivot,
                                                   double tol = Tolerance::ineq) {
    require_three_qubits(p.dims, "eq4");
    detail::require_party(pivot, 3, "eq4");
    double rhs = 0.0;
    for (std::size_t q = 1; q <= 3; ++q) {
        if (q != pivot) rhs += detail::pair(p, pivot, q);
    }
    return make_result("eq4-pivot" + std::to_string(pivot), p.full(), rhs, tol);
}

inline InequalityResult verify_marginal_split(const CoherenceProfile &p, std::size_t single,
                                              double tol = Tolerance::ineq) {
    require_three_qubits(p.dims, "eq5");
    detail::require_party(single, 3, "eq5");
    SubsystemSet rest(SubsystemSet{single}.complement(3));
    double rhs = p.at({single}) + p.at(rest);
    return make_result("eq5-single" + std::to_string(single), p.full(), rhs, tol);
}

inline InequalityResult verify_singles_sum(const CoherenceProfile &p, double tol = Tolerance::ineq) {
    double rhs = 0.0;
    for (std::size_t q = 1; q <= p.dims.parties(); ++q) rhs += p.at({q});
    return make_result("eq3", p.full(), rhs, tol);
}

/// C_full >= sum_{a in Gamma(m,n)} C_a / binom(n-1, m-1), any local dims.
inline InequalityResult verify_corollary1(const CoherenceProfile &p, std::size_t m, double tol = Tolerance::ineq) {
    const std::size_t n = p.dims.parties();
    if (m < 1 || m > n) {
        throw DomainError("cor1: need 1 <= m <= n, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
    }
    double sum = 0.0;
    for (const auto &a : gamma(m, n).members) sum += p.at(a);
    double rhs = sum / static_cast<double>(binomial(n - 1, m - 1));
    std::string name = (p.dims.all_qubits() ? "cor1-m" : "cor2-m") + std::to_string(m);
    return make_result(std::move(name), p.full(), rhs, tol);
}

/// The m = n-1 case: C_full >= (sum of all (n-1)-party coherences) / (n-1).
inline InequalityResult verify_theorem2(const CoherenceProfile &p, double tol = Tolerance::ineq) {
    const std::size_t n = p.dims.parties();
    if (n < 2) {
        throw DomainError("thm2 needs at least two parties");
    }
    auto r = verify_corollary1(p, n - 1, tol);
    r.name = "thm2";
    return r;
}

inline InequalityResult verify_theorem3(const CoherenceProfile &p, const PureState &psi,
                                        double tol = Tolerance::ineq) {
    require_three_qubits(p.dims, "thm3");
    double rhs = (p.at({1, 2}) + p.at({1, 3}) + p.at({2, 3})) / 2.0 + three_tangle(psi).tau;
    return make_result("thm3", p.full(), rhs, tol);
}

inline InequalityResult verify_eq10(const CoherenceProfile &p, const PureState &psi, double tol = Tolerance::ineq) {
    require_three_qubits(p.dims, "eq10");
    double rhs = p.at({1}) + p.at({2}) + p.at({3}) + three_tangle(psi).tau;
    return make_result("eq10", p.full(), rhs, tol);
}

// State-level conveniences.

inline InequalityResult verify_theorem1(const DensityOperator &rho, double tol = Tolerance::ineq) {
    require_three_qubits(rho.dims(), "thm1");
    return verify_theorem1(coherence_profile(rho), tol);
}
inline InequalityResult verify_additive_conjecture(const DensityOperator &rho, std::size_t pivot,
                                                   double tol = Tolerance::ineq) {
    require_three_qubits(rho.dims(), "eq4");
    return verify_additive_conjecture(coherence_profile(rho), pivot, tol);
}
inline InequalityResult verify_marginal_split(const DensityOperator &rho, std::size_t single,
                                              double tol = Tolerance::ineq) {
    require_three_qubits(rho.dims(), "eq5");
    return verify_marginal_split(coherence_profile(rho), single, tol);
}
inline InequalityResult verify_singles_sum(const DensityOperator &rho, double tol = Tolerance::ineq) {
    return verify_singles_sum(coherence_profile(rho, std::vector<std::size_t>{1, rho.dims().parties()}), tol);
}
inline InequalityResult verify_corollary1(const DensityOperator &rho, std::size_t m, double tol = Tolerance::ineq) {
    const std::size_t n = rho.dims().parties();
    if (m < 1 || m > n) {
        throw DomainError("cor1: need 1 <= m <= n, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
    }
    return verify_corollary1(coherence_profile(rho, std::vector<std::size_t>{m, n}), m, tol);
}
inline InequalityResult verify_theorem2(const DensityOperator &rho, double tol = Tolerance::ineq) {
    const std::size_t n = rho.dims().parties();
    if (n < 2) throw DomainError("thm2 needs at least two parties");
    return verify_theorem2(coherence_profile(rho, std::vector<std::size_t>{n - 1, n}), tol);
}
inline InequalityResult verify_theorem3(const PureState &psi, double tol = Tolerance::ineq) {
    require_three_qubits(psi.dims(), "thm3");
    return verify_theorem3(coherence_profile(density_from_pure(psi)), psi, tol);
}
inline InequalityResult verify_eq10(const PureState &psi, double tol = Tolerance::ineq) {
    require_three_qubits(psi.dims(), "eq10");
    return verify_eq10(coherence_profile(density_from_pure(psi)), psi, tol);
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

/// Every registry name applicable to a state of the given shape, in registry
/// order. `suite_only` drops thm2, which run_suite does not emit.
inline std::vector<std::string> registry_names(const LocalDims &dims, bool pure, bool suite_only = true) {
    std::vector<std::string> names;
    const bool three_qubit = dims == LocalDims{2, 2, 2};
    const std::size_t n = dims.parties();
    if (three_qubit) {
        names.emplace_back("thm1");
        names.emplace_back("eq3");
        for (int p = 1; p <= 3; ++p) names.push_back("eq4-pivot" + std::to_string(p));
        for (int s = 1; s <= 3; ++s) names.push_back("eq5-single" + std::to_string(s));
    }
    if (!suite_only && n >= 2) names.emplace_back("thm2");
    const char *prefix = dims.all_qubits() ? "cor1-m" : "cor2-m";
    for (std::size_t m = 1; m <= n; ++m) names.push_back(prefix + std::to_string(m));
    if (three_qubit && pure) {
        names.emplace_back("thm3");
        names.emplace_back("eq10");
    }
    return names;
}

namespace detail {

inline bool parse_suffix(std::string_view name, std::string_view prefix, std::size_t &value) {
    if (!name.starts_with(prefix) || name.size() == prefix.size()) return false;
    std::size_t v = 0;
    for (char ch : name.substr(prefix.size())) {
        if (ch < '0' || ch > '9') return false;
        v = v * 10 + static_cast<std::size_t>(ch - '0');
        if (v > 1000) return false;
    }
    value = v;
    return true;
}

}  // namespace detail

/// True if `name` is a registry verifier for some state shape.
inline bool is_registry_name(std::string_view name) {
    std::size_t k = 0;
    if (name == "thm1" || name == "eq3" || name == "thm2" || name == "thm3" || name == "eq10") return true;
    if (detail::parse_suffix(name, "eq4-pivot", k) || detail::parse_suffix(name, "eq5-single", k)) {
        return k >= 1 && k <= 3;
    }
    if (detail::parse_suffix(name, "cor1-m", k) || detail::parse_suffix(name, "cor2-m", k)) return k >= 1;
    return false;
}

/// Evaluates one registry verifier. `psi` is required for thm3 and eq10.
inline InequalityResult evaluate_verifier(std::string_view name, const CoherenceProfile &p, const PureState *psi,
                                          double tol = Tolerance::ineq) {
    std::size_t k = 0;
    if (name == "thm1") return verify_theorem1(p, tol);
    if (name == "eq3") return verify_singles_sum(p, tol);
    if (name == "thm2") return verify_theorem2(p, tol);
    if (detail::parse_suffix(name, "eq4-pivot", k)) return verify_additive_conjecture(p, k, tol);
    if (detail::parse_suffix(name, "eq5-single", k)) return verify_marginal_split(p, k, tol);
    if (detail::parse_suffix(name, "cor1-m", k) || detail::parse_suffix(name, "cor2-m", k)) {
        auto r = verify_corollary1(p, k, tol);
        if (r.name != name) {
            throw DomainError(std::string(name) + " does not apply to dims (" + p.dims.str() + "); use " + r.name);
        }
        return r;
    }
    if (name == "thm3" || name == "eq10") {
        if (psi == nullptr) {
            throw DomainError(std::string(name) + " applies to pure states only");
        }
        return name == "thm3" ? verify_theorem3(p, *psi, tol) : verify_eq10(p, *psi, tol);
    }
    throw DomainError("unknown verifier \"" + std::string(name) + "\"");
}

/// Every applicable suite verifier, in registry order.
inline std::vector<InequalityResult> run_suite(const AnyState &state, double tol = Tolerance::ineq) {
    const PureState *psi = std::get_if<PureState>(&state);
    CoherenceProfile profile = coherence_profile(as_density(state));
    std::vector<InequalityResult> out;
    for (const auto &name : registry_names(dims_of(state), psi != nullptr)) {
        out.push_back(evaluate_verifier(name, profile, psi, tol));
    }
    return out;
}

/// True when every result other than the conjecture holds.
inline bool proved_bounds_hold(const std::vector<InequalityResult> &results) {
    for (const auto &r : results) {
        if (!is_conjecture(r.name) && !r.holds) return false;
    }
    return true;
}

}  // namespace l1coh
