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
#include <cstdint>
#include <numbers>
#include <random>

#include "l1coh/state.hpp"

namespace l1coh {

/// Seeded source of standard normal deviates.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Uniforms are formed from the top 53 bits and normals via the
/// Box-Muller transform, so a given seed yields the same stream on every
/// conforming standard library (std::normal_distribution does not).
class GaussianSource {
   public:
    explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on (0, 1].
    double uniform_open_closed() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform_open_closed();
        double u2 = uniform_open_closed();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    /// Real and imaginary parts i.i.d. N(0, 1/2), so E|z|^2 = 1.
    Complex complex_normal() {
        double re = normal();
        double im = normal();
        return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
    }

   private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Haar-random pure state: normalized i.i.d. complex Gaussian amplitudes.
inline PureState sample_haar_pure(const LocalDims &dims, std::uint64_t seed) {
    GaussianSource src(seed);
    Vector amps(static_cast<Eigen::Index>(dims.total()));
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        amps(i) = src.complex_normal();
    }
    return PureState::normalized(dims, std::move(amps));
}

/// Induced-measure mixed state G G^dagger / tr(G G^dagger), G a D x rank
/// complex Gaussian matrix.
inline DensityOperator sample_ginibre_mixed(const LocalDims &dims, std::size_t rank, std::uint64_t seed) {
    if (rank < 1 || rank > dims.total()) {
        throw DomainError("sample_ginibre_mixed: rank " + std::to_string(rank) + " outside [1, " +
                          std::to_string(dims.total()) + "]");
    }
    GaussianSource src(seed);
    const auto d = static_cast<Eigen::Index>(dims.total());
    Matrix g(d, static_cast<Eigen::Index>(rank));
    for (Eigen::Index r = 0; r < g.rows(); ++r) {
        for (Eigen::Index c = 0; c < g.cols(); ++c) {
            g(r, c) = src.complex_normal();
        }
    }
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    // Exact Hermitian symmetry; the product is Hermitian only up to roundoff.
    rho = (rho + rho.adjoint()) * 0.5;
    return DensityOperator(dims, std::move(rho));
}

}  // namespace l1coh
