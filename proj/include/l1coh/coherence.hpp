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

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <vector>

#include "l1coh/state.hpp"
#include "l1coh/subsets.hpp"

namespace l1coh {

/// Sum of |rho(r, c)| over all off-diagonal entries.
inline double l1_coherence(const Matrix &m) {
    double sum = 0.0;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r != c) sum += std::abs(m(r, c));
        }
    }
    return sum;
}

inline double l1_coherence(const DensityOperator &rho) { return l1_coherence(rho.mat()); }

inline double subset_coherence(const DensityOperator &rho, const SubsystemSet &a) {
    return l1_coherence(partial_trace(rho, a));
}

/// Coherence of every requested reduction of one state.
struct CoherenceProfile {
    LocalDims dims;
    std::map<SubsystemSet, double> by_subset;

    double at(const SubsystemSet &a) const {
        auto it = by_subset.find(a);
        if (it == by_subset.end()) {
            throw DomainError("coherence profile has no entry for subset " + a.str());
        }
        return it->second;
    }
    double full() const { return at(SubsystemSet::all(dims.parties())); }
};

/// C_a for every a in Gamma(m, n), for each m in `sizes` (default 1..n).
inline CoherenceProfile coherence_profile(const DensityOperator &rho,
                                          const std::optional<std::vector<std::size_t>> &sizes = std::nullopt) {
    const std::size_t n = rho.dims().parties();
    std::vector<std::size_t> ms;
    if (sizes) {
        ms = *sizes;
    } else {
        for (std::size_t m = 1; m <= n; ++m) ms.push_back(m);
    }
    CoherenceProfile profile{rho.dims(), {}};
    for (std::size_t m : ms) {
        for (const auto &a : gamma(m, n).members) {
            profile.by_subset.emplace(a, subset_coherence(rho, a));
        }
    }
    return profile;
}

/// C_AB - C_A - C_B of a bipartite state.
inline double correlated_coherence(const DensityOperator &rho) {
    if (rho.dims().parties() != 2) {
        throw DomainError("correlated_coherence needs a bipartite state, got " +
                          std::to_string(rho.dims().parties()) + " parties");
    }
    return l1_coherence(rho) - subset_coherence(rho, {1}) - subset_coherence(rho, {2});
}

// ---------------------------------------------------------------------------
// Residual of the three-qubit pairwise bound.
//
// Every off-diagonal entry of a 3-qubit rho is counted twice in 2*C123 but,
// after the triangle inequality, only in the pair reductions that keep all of
// the qubits on which its row and column labels differ. Entries whose labels
// differ in two qubits are left over once, those differing in all three
// twice. D collects those leftovers.
// ---------------------------------------------------------------------------

struct ResidualTerm {
    unsigned row;  // 3-bit label ijk
    unsigned col;  // 3-bit label i'j'k'
    int weight;
};

// clang-format off
inline constexpr std::array<ResidualTerm, 32> kPairResidualTerms{{
    {0b000, 0b011, 1}, {0b000, 0b101, 1}, {0b000, 0b110, 1}, {0b001, 0b010, 1},
    {0b001, 0b100, 1}, {0b001, 0b111, 1}, {0b010, 0b100, 1}, {0b010, 0b111, 1},
    {0b011, 0b101, 1}, {0b011, 0b110, 1}, {0b100, 0b111, 1}, {0b101, 0b110, 1},
    {0b011, 0b000, 1}, {0b101, 0b000, 1}, {0b110, 0b000, 1}, {0b010, 0b001, 1},
    {0b100, 0b001, 1}, {0b111, 0b001, 1}, {0b100, 0b010, 1}, {0b111, 0b010, 1},
    {0b101, 0b011, 1}, {0b110, 0b011, 1}, {0b111, 0b100, 1}, {0b110, 0b101, 1},
    {0b000, 0b111, 2}, {0b001, 0b110, 2}, {0b010, 0b101, 2}, {0b011, 0b100, 2},
    {0b100, 0b011, 2}, {0b101, 0b010, 2}, {0b110, 0b001, 2}, {0b111, 0b000, 2},
}};
// clang-format on

inline void require_three_qubits(const LocalDims &dims, const char *what) {
    if (!(dims == LocalDims{2, 2, 2})) {
        throw DomainError(std::string(what) + " needs dims (2,2,2), got (" + dims.str() + ")");
    }
}

/// D such that 2*C123 - (C12 + C13 + C23) >= D >= 0.
inline double pair_bound_residual(const DensityOperator &rho) {
    require_three_qubits(rho.dims(), "pair_bound_residual");
    double sum = 0.0;
    for (const auto &t : kPairResidualTerms) {
        sum += t.weight * std::abs(rho(t.row, t.col));
    }
    return sum;
}

}  // namespace l1coh
