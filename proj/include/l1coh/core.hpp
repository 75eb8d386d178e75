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

#include <stdexcept>
#include <string>
#include <utility>

namespace l1coh {

/// Absolute tolerances shared by the whole library.
struct Tolerance {
    static constexpr double norm = 1e-10;  // |<psi|psi> - 1|, |tr rho - 1|
    static constexpr double herm = 1e-10;  // max |rho - rho^dagger|
    static constexpr double psd = 1e-10;   // smallest eigenvalue >= -psd
    static constexpr double ineq = 1e-9;   // inequality slack
};

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A value failed one of its type invariants. `invariant()` is a short
/// stable tag ("norm", "trace", "hermitian", "psd", "dims", ...).
class InvariantViolation : public Error {
   public:
    InvariantViolation(std::string invariant, const std::string &detail)
        : Error(invariant + ": " + detail), invariant_(std::move(invariant)) {}

    const std::string &invariant() const noexcept { return invariant_; }

   private:
    std::string invariant_;
};

/// An operation was applied outside its domain (wrong dims, unknown name,
/// out-of-range argument).
class DomainError : public Error {
   public:
    using Error::Error;
};

}  // namespace l1coh
