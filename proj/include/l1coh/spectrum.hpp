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
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "l1coh/core.hpp"

namespace l1coh {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Largest entrywise deviation |m(r,c) - conj(m(c,r))|.
inline double hermiticity_error(const Matrix &m) {
    if (m.rows() != m.cols()) {
        return INFINITY;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

inline void require_hermitian(const Matrix &m, double tol = Tolerance::herm) {
    if (m.rows() != m.cols()) {
        throw InvariantViolation("hermitian", "matrix is not square");
    }
    double err = hermiticity_error(m);
    if (!(err <= tol)) {
        throw InvariantViolation(
            "hermitian", "max |m - m^dagger| = " + std::to_string(err) + " exceeds " + std::to_string(tol));
    }
}

/// Real spectrum of a Hermitian matrix, sorted descending.
inline std::vector<double> hermitian_eigenvalues(const Matrix &m) {
    require_hermitian(m);
    if (m.rows() == 0) {
        return {};
    }
    // Symmetrize so the solver sees an exactly Hermitian input.
    Matrix h = (m + m.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error("hermitian_eigenvalues: eigensolver did not converge");
    }
    const auto &ev = solver.eigenvalues();
    std::vector<double> out(ev.data(), ev.data() + ev.size());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues within roundoff of zero are clamped.
inline Matrix psd_sqrt(const Matrix &m) {
    require_hermitian(m);
    Matrix h = (m + m.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw Error("psd_sqrt: eigensolver did not converge");
    }
    Eigen::VectorXd roots = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return solver.eigenvectors() * roots.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace l1coh
