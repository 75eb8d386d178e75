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

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "l1coh/coherence.hpp"
#include "l1coh/spectrum.hpp"
#include "l1coh/state.hpp"

namespace l1coh {

/// Polynomial pieces of the three-tangle; tau = 4 |d1 - 2 d2 + 4 d3|.
struct TangleBreakdown {
    Complex d1;
    Complex d2;
    Complex d3;
    double tau;
};

namespace detail {

inline void require_pure_three_qubits(const PureState &psi, const char *what) {
    require_three_qubits(psi.dims(), what);
}

}  // namespace detail

/// Three-tangle from the hyperdeterminant polynomial. Products use the raw
/// complex amplitudes; the modulus is taken once at the end.
inline TangleBreakdown three_tangle(const PureState &psi) {
    detail::require_pure_three_qubits(psi, "three_tangle");
    auto a = [&](unsigned i, unsigned j, unsigned k) { return psi.amp(4 * i + 2 * j + k); };
    auto sq = [](Complex z) { return z * z; };

    Complex d1 = sq(a(0, 0, 0)) * sq(a(1, 1, 1)) + sq(a(0, 0, 1)) * sq(a(1, 1, 0)) +
                 sq(a(0, 1, 0)) * sq(a(1, 0, 1)) + sq(a(1, 0, 0)) * sq(a(0, 1, 1));
    Complex d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0) +
                 a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0) +
                 a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1) +
                 a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0) +
                 a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1) +
                 a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);
    Complex d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) +
                 a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
    double tau = 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
    return {d1, d2, d3, tau};
}

namespace detail {

inline Matrix spin_flip_4() {
    // sy (x) sy is real: anti-diagonal (-1, 1, 1, -1).
    Matrix f = Matrix::Zero(4, 4);
    f(0, 3) = -1.0;
    f(1, 2) = 1.0;
    f(2, 1) = 1.0;
    f(3, 0) = -1.0;
    return f;
}

}  // namespace detail

/// Wootters concurrence of rho = V V^dagger, V a 4 x r decomposition:
/// max(0, l1 - l2 - l3 - l4) where l_i, the square roots of the spectrum of
/// rho (sy x sy) conj(rho) (sy x sy), are the singular values of
/// V^T (sy x sy) V. Any decomposition gives the same l_i.
inline double concurrence_from_decomposition(const Matrix &v) {
    if (v.rows() != 4 || v.cols() < 1) {
        throw DomainError("concurrence_from_decomposition needs a 4 x r matrix");
    }
    Matrix tau = v.transpose() * detail::spin_flip_4() * v;
    Eigen::JacobiSVD<Matrix> svd(tau);
    std::vector<double> l(4, 0.0);
    const auto &sv = svd.singularValues();
    for (Eigen::Index i = 0; i < sv.size() && i < 4; ++i) l[static_cast<std::size_t>(i)] = sv(i);
    std::sort(l.begin(), l.end(), std::greater<>());
    return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

/// Wootters concurrence of a two-qubit density operator. The decomposition
/// comes from its eigenvectors; eigenvalues below 1e-13 are dropped since
/// their square roots would be pure roundoff (1e-16 -> 1e-8).
inline double two_qubit_concurrence(const DensityOperator &rho) {
    if (!(rho.dims() == LocalDims{2, 2})) {
        throw DomainError("two_qubit_concurrence needs dims (2,2), got (" + rho.dims().str() + ")");
    }
    Matrix h = (rho.mat() + rho.mat().adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw Error("two_qubit_concurrence: eigensolver did not converge");
    }
    constexpr double kDrop = 1e-13;
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < 4; ++i) {
        if (solver.eigenvalues()(i) > kDrop) keep.push_back(i);
    }
    if (keep.empty()) return 0.0;
    Matrix v(4, static_cast<Eigen::Index>(keep.size()));
    for (std::size_t j = 0; j < keep.size(); ++j) {
        auto i = keep[j];
        v.col(static_cast<Eigen::Index>(j)) = solver.eigenvectors().col(i) * std::sqrt(solver.eigenvalues()(i));
    }
    return concurrence_from_decomposition(v);
}

/// Three-tangle via the monogamy identity
/// tau = 4 det(rho_A) - C(rho_AB)^2 - C(rho_AC)^2, clamped at 0.
/// Independent of three_tangle(): it goes through reduced states and the
/// spin-flip spectrum, never through the amplitude polynomial.
inline double ckw_tangle_oracle(const PureState &psi) {
    detail::require_pure_three_qubits(psi, "ckw_tangle_oracle");
    DensityOperator rho = density_from_pure(psi);
    Matrix ra = partial_trace(rho, {1}).mat();
    double det_a = (ra(0, 0) * ra(1, 1) - ra(0, 1) * ra(1, 0)).real();
    // rho_AB = sum_k v_k v_k^dagger with v_k(ij) = a_ijk, and likewise for
    // rho_AC with the B label summed.
    Matrix v_ab(4, 2);
    Matrix v_ac(4, 2);
    for (unsigned i = 0; i < 2; ++i) {
        for (unsigned j = 0; j < 2; ++j) {
            for (unsigned k = 0; k < 2; ++k) {
                Complex a = psi.amp(4 * i + 2 * j + k);
                v_ab(2 * i + j, k) = a;
                v_ac(2 * i + k, j) = a;
            }
        }
    }
    double c_ab = concurrence_from_decomposition(v_ab);
    double c_ac = concurrence_from_decomposition(v_ac);
    return std::max(0.0, 4.0 * det_a - c_ab * c_ab - c_ac * c_ac);
}

/// Pure-state residual D'/2 in C123 >= (C12 + C13 + C23)/2 + D'/2: pairwise
/// amplitude-magnitude products over labels at Hamming distance 2 (weight 1)
/// and 3 (weight 2).
inline double pure_pair_bound_residual(const PureState &psi) {
    detail::require_pure_three_qubits(psi, "pure_pair_bound_residual");
    auto m = [&](unsigned x, unsigned y) { return std::abs(psi.amp(x)) * std::abs(psi.amp(y)); };
    double single = m(0b000, 0b011) + m(0b000, 0b101) + m(0b000, 0b110) + m(0b001, 0b010) +
                    m(0b001, 0b100) + m(0b001, 0b111) + m(0b010, 0b100) + m(0b010, 0b111) +
                    m(0b011, 0b110) + m(0b011, 0b101) + m(0b100, 0b111) + m(0b101, 0b110);
    double doubled = m(0b000, 0b111) + m(0b001, 0b110) + m(0b010, 0b101) + m(0b011, 0b100);
    return single + 2.0 * doubled;
}

}  // namespace l1coh
