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
#include <complex>
#include <numbers>
#include <vector>

#include "l1coh/l1coh.hpp"

namespace l1coh::testing {

inline constexpr double kPi = std::numbers::pi;

inline PureState ghz(double phi) { return make_family_point(Family::Ghz, {phi}).state; }
inline PureState w_state(double theta, double phi) { return make_family_point(Family::W, {theta, phi}).state; }
inline PureState two_term(double alpha) { return make_family_point(Family::TwoTerm, {alpha}).state; }

inline PureState pure(const LocalDims &dims, std::vector<Complex> amps) {
    Vector v(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t i = 0; i < amps.size(); ++i) v(static_cast<Eigen::Index>(i)) = amps[i];
    return PureState::normalized(dims, std::move(v));
}

/// Equal superposition over every basis state of `dims`.
inline PureState max_coherent(const LocalDims &dims) {
    return PureState::normalized(dims, Vector::Ones(static_cast<Eigen::Index>(dims.total())));
}

/// Diagonal density operator with the given (normalized) weights.
inline DensityOperator diagonal(const LocalDims &dims, std::vector<double> weights) {
    double s = 0.0;
    for (double w : weights) s += w;
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dims.total()), static_cast<Eigen::Index>(dims.total()));
    for (std::size_t i = 0; i < weights.size(); ++i) {
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = weights[i] / s;
    }
    return DensityOperator(dims, std::move(m));
}

/// Random state alternating between Haar pure and Ginibre mixed of varying rank.
inline DensityOperator random_state(const LocalDims &dims, std::uint64_t seed) {
    if (seed % 2 == 0) return density_from_pure(sample_haar_pure(dims, seed));
    std::size_t rank = 1 + (seed / 2) % dims.total();
    return sample_ginibre_mixed(dims, rank, seed);
}

/// U rho U^dagger for the diagonal unitary U = diag(exp(i phases)).
inline DensityOperator conjugate_by_phases(const DensityOperator &rho, const std::vector<double> &phases) {
    Matrix m = rho.mat();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            m(r, c) *= std::polar(1.0, phases[static_cast<std::size_t>(r)] - phases[static_cast<std::size_t>(c)]);
        }
    }
    return DensityOperator(rho.dims(), std::move(m));
}

inline double max_abs_diff(const Matrix &a, const Matrix &b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace l1coh::testing
