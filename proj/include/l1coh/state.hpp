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
#include <compare>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "l1coh/core.hpp"
#include "l1coh/spectrum.hpp"

namespace l1coh {

using Complex = std::complex<double>;

/// Largest supported total dimension (a 10-qubit density matrix).
inline constexpr std::size_t kMaxTotalDim = 1024;

/// Local dimension of each party of a tensor-product space. Party 1 is the
/// most significant digit of a flat basis index.
class LocalDims {
   public:
    LocalDims(std::initializer_list<std::size_t> dims) : LocalDims(std::vector<std::size_t>(dims)) {}

    explicit LocalDims(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
        if (dims_.empty()) {
            throw InvariantViolation("dims", "at least one party is required");
        }
        total_ = 1;
        for (std::size_t d : dims_) {
            if (d < 2) {
                throw InvariantViolation("dims", "every local dimension must be >= 2, got " + std::to_string(d));
            }
            if (total_ > kMaxTotalDim / d) {
                throw InvariantViolation("dims", "total dimension exceeds " + std::to_string(kMaxTotalDim));
            }
            total_ *= d;
        }
    }

    static LocalDims qubits(std::size_t n) { return LocalDims(std::vector<std::size_t>(n, 2)); }

    std::size_t parties() const noexcept { return dims_.size(); }
    std::size_t total() const noexcept { return total_; }
    /// 0-based access.
    std::size_t operator[](std::size_t i) const { return dims_.at(i); }
    const std::vector<std::size_t> &values() const noexcept { return dims_; }

    bool all_qubits() const noexcept {
        return std::all_of(dims_.begin(), dims_.end(), [](std::size_t d) { return d == 2; });
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < dims_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(dims_[i]);
        }
        return s;
    }

    bool operator==(const LocalDims &other) const = default;

   private:
    std::vector<std::size_t> dims_;
    std::size_t total_ = 1;
};

/// Nonempty, strictly increasing set of 1-based party labels.
class SubsystemSet {
   public:
    SubsystemSet(std::initializer_list<std::size_t> parties) : SubsystemSet(std::vector<std::size_t>(parties)) {}

    explicit SubsystemSet(std::vector<std::size_t> parties) : parties_(std::move(parties)) {
        if (parties_.empty()) {
            throw InvariantViolation("subset", "subsystem set must be nonempty");
        }
        if (parties_.front() < 1) {
            throw InvariantViolation("subset", "party labels are 1-based");
        }
        for (std::size_t i = 1; i < parties_.size(); ++i) {
            if (parties_[i] <= parties_[i - 1]) {
                throw InvariantViolation("subset", "party labels must be strictly increasing");
            }
        }
    }

    /// {1, ..., n}
    static SubsystemSet all(std::size_t n) {
        std::vector<std::size_t> p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = i + 1;
        return SubsystemSet(std::move(p));
    }

    std::size_t size() const noexcept { return parties_.size(); }
    std::size_t max() const noexcept { return parties_.back(); }
    const std::vector<std::size_t> &parties() const noexcept { return parties_; }

    bool contains(std::size_t party) const {
        return std::binary_search(parties_.begin(), parties_.end(), party);
    }

    void check_within(std::size_t n) const {
        if (max() > n) {
            throw InvariantViolation(
                "subset", "party " + std::to_string(max()) + " exceeds party count " + std::to_string(n));
        }
    }

    /// Parties of {1..n} not in this set; empty when this set is everything.
    std::vector<std::size_t> complement(std::size_t n) const {
        std::vector<std::size_t> out;
        for (std::size_t p = 1; p <= n; ++p) {
            if (!contains(p)) out.push_back(p);
        }
        return out;
    }

    /// Compact label, e.g. "13" or "1,10" once labels need two digits.
    std::string str() const {
        bool wide = max() > 9;
        std::string s;
        for (std::size_t i = 0; i < parties_.size(); ++i) {
            if (wide && i) s += ',';
            s += std::to_string(parties_[i]);
        }
        return s;
    }

    auto operator<=>(const SubsystemSet &other) const = default;

   private:
    std::vector<std::size_t> parties_;
};

// ---------------------------------------------------------------------------
// Mixed-radix indexing
// ---------------------------------------------------------------------------

inline std::size_t encode_index(std::span<const std::size_t> digits, const LocalDims &dims) {
    if (digits.size() != dims.parties()) {
        throw InvariantViolation("digits", "expected " + std::to_string(dims.parties()) + " digits, got " +
                                               std::to_string(digits.size()));
    }
    std::size_t flat = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] >= dims[i]) {
            throw InvariantViolation("digits", "digit " + std::to_string(digits[i]) + " of party " +
                                                   std::to_string(i + 1) + " is out of range");
        }
        flat = flat * dims[i] + digits[i];
    }
    return flat;
}

inline std::size_t encode_index(std::initializer_list<std::size_t> digits, const LocalDims &dims) {
    return encode_index(std::span<const std::size_t>(digits.begin(), digits.size()), dims);
}

inline std::vector<std::size_t> decode_index(std::size_t flat, const LocalDims &dims) {
    if (flat >= dims.total()) {
        throw InvariantViolation("digits", "flat index " + std::to_string(flat) + " is out of range");
    }
    std::vector<std::size_t> digits(dims.parties());
    for (std::size_t i = dims.parties(); i-- > 0;) {
        digits[i] = flat % dims[i];
        flat /= dims[i];
    }
    return digits;
}

// ---------------------------------------------------------------------------
// States
// ---------------------------------------------------------------------------

/// Normalized amplitude vector over a tensor-product basis.
class PureState {
   public:
    /// Validates that the amplitudes have unit norm.
    PureState(LocalDims dims, Vector amps) : dims_(std::move(dims)), amps_(std::move(amps)) {
        if (static_cast<std::size_t>(amps_.size()) != dims_.total()) {
            throw InvariantViolation("dims", "expected " + std::to_string(dims_.total()) + " amplitudes, got " +
                                                 std::to_string(amps_.size()));
        }
        double err = std::abs(amps_.squaredNorm() - 1.0);
        if (!(err <= Tolerance::norm)) {
            throw InvariantViolation("norm", "|<psi|psi> - 1| = " + std::to_string(err));
        }
    }

    /// Rescales `amps` to unit norm first.
    static PureState normalized(LocalDims dims, Vector amps) {
        double n = amps.norm();
        if (!(n > 0.0) || !std::isfinite(n)) {
            throw InvariantViolation("norm", "cannot normalize a zero or non-finite vector");
        }
        amps /= n;
        return PureState(std::move(dims), std::move(amps));
    }

    /// Computational basis state |digits>.
    static PureState basis(LocalDims dims, std::span<const std::size_t> digits) {
        Vector amps = Vector::Zero(static_cast<Eigen::Index>(dims.total()));
        amps(static_cast<Eigen::Index>(encode_index(digits, dims))) = 1.0;
        return PureState(std::move(dims), std::move(amps));
    }

    const LocalDims &dims() const noexcept { return dims_; }
    const Vector &amps() const noexcept { return amps_; }
    Complex amp(std::size_t flat) const { return amps_(static_cast<Eigen::Index>(flat)); }

   private:
    LocalDims dims_;
    Vector amps_;
};

/// Throws InvariantViolation naming the first failed density-matrix invariant.
inline void check_density(const LocalDims &dims, const Matrix &mat) {
    auto d = static_cast<Eigen::Index>(dims.total());
    if (mat.rows() != d || mat.cols() != d) {
        throw InvariantViolation("dims", "matrix shape does not match total dimension " + std::to_string(d));
    }
    if (!mat.allFinite()) {
        throw InvariantViolation("finite", "matrix has non-finite entries");
    }
    require_hermitian(mat);
    double tr_err = std::abs(mat.trace() - Complex(1.0, 0.0));
    if (!(tr_err <= Tolerance::norm)) {
        throw InvariantViolation("trace", "|tr rho - 1| = " + std::to_string(tr_err));
    }
    double lo = hermitian_eigenvalues(mat).back();
    if (lo < -Tolerance::psd) {
        throw InvariantViolation("psd", "minimum eigenvalue " + std::to_string(lo));
    }
}

/// Hermitian, unit-trace, positive semidefinite matrix with party structure.
class DensityOperator {
   public:
    /// Validates every invariant.
    DensityOperator(LocalDims dims, Matrix mat) : dims_(std::move(dims)), mat_(std::move(mat)) {
        check_density(dims_, mat_);
    }

    /// Skips validation. Only for results of operations that preserve the
    /// invariants of already-validated inputs.
    static DensityOperator assume_valid(LocalDims dims, Matrix mat) {
        return DensityOperator(std::move(dims), std::move(mat), Unchecked{});
    }

    const LocalDims &dims() const noexcept { return dims_; }
    const Matrix &mat() const noexcept { return mat_; }
    Complex operator()(std::size_t r, std::size_t c) const {
        return mat_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }

    double purity() const { return (mat_ * mat_).trace().real(); }

   private:
    struct Unchecked {};
    DensityOperator(LocalDims dims, Matrix mat, Unchecked) : dims_(std::move(dims)), mat_(std::move(mat)) {}

    LocalDims dims_;
    Matrix mat_;
};

/// |psi><psi|
inline DensityOperator density_from_pure(const PureState &psi) {
    return DensityOperator::assume_valid(psi.dims(), psi.amps() * psi.amps().adjoint());
}

/// Reduced state on `keep`; kept parties stay in ascending order.
inline DensityOperator partial_trace(const DensityOperator &rho, const SubsystemSet &keep) {
    const LocalDims &dims = rho.dims();
    const std::size_t n = dims.parties();
    keep.check_within(n);
    if (keep.size() == n) {
        return rho;
    }

    std::vector<std::size_t> kept_dims;
    std::size_t kept_total = 1;
    for (std::size_t p : keep.parties()) {
        kept_dims.push_back(dims[p - 1]);
        kept_total *= dims[p - 1];
    }
    const std::size_t traced_total = dims.total() / kept_total;

    // full_index[t * kept_total + k] is the flat index whose kept digits
    // encode k and whose traced digits encode t.
    std::vector<std::size_t> full_index(dims.total());
    for (std::size_t f = 0; f < dims.total(); ++f) {
        auto digits = decode_index(f, dims);
        std::size_t k = 0;
        std::size_t t = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (keep.contains(i + 1)) {
                k = k * dims[i] + digits[i];
            } else {
                t = t * dims[i] + digits[i];
            }
        }
        full_index[t * kept_total + k] = f;
    }

    const auto kt = static_cast<Eigen::Index>(kept_total);
    Matrix out = Matrix::Zero(kt, kt);
    const Matrix &m = rho.mat();
    for (std::size_t t = 0; t < traced_total; ++t) {
        const std::size_t *row = &full_index[t * kept_total];
        for (Eigen::Index r = 0; r < kt; ++r) {
            for (Eigen::Index c = 0; c < kt; ++c) {
                out(r, c) += m(static_cast<Eigen::Index>(row[r]), static_cast<Eigen::Index>(row[c]));
            }
        }
    }
    return DensityOperator::assume_valid(LocalDims(std::move(kept_dims)), std::move(out));
}

/// a (x) b, with b's parties appended after a's.
inline DensityOperator kron(const DensityOperator &a, const DensityOperator &b) {
    std::vector<std::size_t> dims = a.dims().values();
    dims.insert(dims.end(), b.dims().values().begin(), b.dims().values().end());
    LocalDims joint(std::move(dims));

    const Eigen::Index da = a.mat().rows();
    const Eigen::Index db = b.mat().rows();
    Matrix out(da * db, da * db);
    for (Eigen::Index i = 0; i < da; ++i) {
        for (Eigen::Index j = 0; j < da; ++j) {
            out.block(i * db, j * db, db, db) = a.mat()(i, j) * b.mat();
        }
    }
    return DensityOperator::assume_valid(std::move(joint), std::move(out));
}

}  // namespace l1coh
