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
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "l1coh/inequalities.hpp"
#include "l1coh/random.hpp"

namespace l1coh {

struct SimplexOptions {
    double reflection = 1.0;
    double expansion = 2.0;
    double contraction = 0.5;
    double shrink = 0.5;
    std::size_t max_iterations = 200;
    double diameter_tol = 1e-9;  // stop once every vertex is this close to the best
    double initial_step = 0.5;   // offset of the starting vertices along each axis
    // minimize_slack rebuilds the simplex around the best point this many
    // times, scaling the step by step_decay each time. One cycle is plain
    // Nelder-Mead; it stalls well above the true minimum on these objectives.
    std::size_t cycles = 10;
    double step_decay = 0.5;
};

struct SimplexResult {
    std::vector<double> x;
    double value = std::numeric_limits<double>::infinity();
    std::size_t iterations = 0;
    std::size_t evaluations = 0;
};

/// Derivative-free Nelder-Mead descent from an axis-aligned starting simplex.
template <class F>
SimplexResult nelder_mead(F &&f, const std::vector<double> &x0, const SimplexOptions &opt = {}) {
    const std::size_t dim = x0.size();
    SimplexResult res;
    auto eval = [&](const std::vector<double> &x) {
        ++res.evaluations;
        double v = f(x);
        return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
    };

    std::vector<std::vector<double>> pts(dim + 1, x0);
    for (std::size_t i = 0; i < dim; ++i) pts[i + 1][i] += opt.initial_step;
    std::vector<double> vals(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) vals[i] = eval(pts[i]);

    std::vector<std::size_t> order(dim + 1);
    auto affine = [&](const std::vector<double> &base, const std::vector<double> &toward, double t) {
        std::vector<double> p(dim);
        for (std::size_t i = 0; i < dim; ++i) p[i] = base[i] + t * (toward[i] - base[i]);
        return p;
    };

    for (; res.iterations < opt.max_iterations; ++res.iterations) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second = order[dim - (dim > 0 ? 1 : 0)];

        double diameter = 0.0;
        for (std::size_t i = 0; i <= dim; ++i) {
            double d2 = 0.0;
            for (std::size_t k = 0; k < dim; ++k) d2 += (pts[i][k] - pts[best][k]) * (pts[i][k] - pts[best][k]);
            diameter = std::max(diameter, std::sqrt(d2));
        }
        if (diameter < opt.diameter_tol) break;

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == worst) continue;
            for (std::size_t k = 0; k < dim; ++k) centroid[k] += pts[i][k];
        }
        for (double &c : centroid) c /= static_cast<double>(dim);

        auto xr = affine(centroid, pts[worst], -opt.reflection);
        double fr = eval(xr);
        if (fr < vals[best]) {
            auto xe = affine(centroid, xr, opt.expansion);
            double fe = eval(xe);
            if (fe < fr) {
                pts[worst] = std::move(xe), vals[worst] = fe;
            } else {
                pts[worst] = std::move(xr), vals[worst] = fr;
            }
            continue;
        }
        if (fr < vals[second]) {
            pts[worst] = std::move(xr), vals[worst] = fr;
            continue;
        }
        // Contract outside (toward the reflected point) or inside (toward the worst).
        const bool outside = fr < vals[worst];
        auto xc = affine(centroid, outside ? xr : pts[worst], opt.contraction);
        double fc = eval(xc);
        if (fc < (outside ? fr : vals[worst])) {
            pts[worst] = std::move(xc), vals[worst] = fc;
            continue;
        }
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == best) continue;
            pts[i] = affine(pts[best], pts[i], opt.shrink);
            vals[i] = eval(pts[i]);
        }
    }

    std::size_t best = static_cast<std::size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin());
    res.x = pts[best];
    res.value = vals[best];
    return res;
}

// ---------------------------------------------------------------------------
// Slack minimization over pure states
// ---------------------------------------------------------------------------

struct SearchOutcome {
    std::string objective;
    double best_value = std::numeric_limits<double>::infinity();
    PureState best_state;
    std::size_t evaluations = 0;
    std::uint64_t seed = 0;
};

/// Pure state whose amplitudes are (x[2i] + i x[2i+1]), normalized.
inline PureState state_from_params(const LocalDims &dims, const std::vector<double> &x) {
    Vector amps(static_cast<Eigen::Index>(dims.total()));
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        amps(i) = Complex(x[static_cast<std::size_t>(2 * i)], x[static_cast<std::size_t>(2 * i + 1)]);
    }
    return PureState::normalized(dims, std::move(amps));
}

inline std::vector<double> params_from_state(const PureState &psi) {
    std::vector<double> x;
    x.reserve(2 * psi.dims().total());
    for (Eigen::Index i = 0; i < psi.amps().size(); ++i) {
        x.push_back(psi.amps()(i).real());
        x.push_back(psi.amps()(i).imag());
    }
    return x;
}

/// Slack of verifier `objective` on a pure state.
inline double objective_slack(const std::string &objective, const PureState &psi) {
    CoherenceProfile p = coherence_profile(density_from_pure(psi));
    return evaluate_verifier(objective, p, &psi).slack;
}

inline void require_objective(const std::string &objective, const LocalDims &dims) {
    if (!is_registry_name(objective)) {
        throw DomainError("unknown objective \"" + objective + "\"");
    }
    auto names = registry_names(dims, /*pure=*/true, /*suite_only=*/false);
    if (std::find(names.begin(), names.end(), objective) == names.end()) {
        throw DomainError("objective \"" + objective + "\" does not apply to dims (" + dims.str() + ")");
    }
}

/// Smallest slack of `objective` found by Nelder-Mead from `restarts`
/// Haar-random starts (restart r starts from the state sampled with seed + r).
inline SearchOutcome minimize_slack(const std::string &objective, const LocalDims &dims, std::size_t restarts,
                                    std::uint64_t seed, const SimplexOptions &opt = {}) {
    require_objective(objective, dims);
    if (restarts < 1) throw DomainError("minimize_slack needs at least one restart");

    auto f = [&](const std::vector<double> &x) {
        double norm2 = 0.0;
        for (double v : x) norm2 += v * v;
        if (!(norm2 > 1e-200) || !std::isfinite(norm2)) return std::numeric_limits<double>::infinity();
        return objective_slack(objective, state_from_params(dims, x));
    };

    SearchOutcome out{objective, std::numeric_limits<double>::infinity(), sample_haar_pure(dims, seed), 0, seed};
    for (std::size_t r = 0; r < restarts; ++r) {
        auto x = params_from_state(sample_haar_pure(dims, seed + r));
        SimplexOptions cycle_opt = opt;
        double value = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < std::max<std::size_t>(opt.cycles, 1); ++c) {
            SimplexResult res = nelder_mead(f, x, cycle_opt);
            out.evaluations += res.evaluations;
            value = res.value;
            x = params_from_state(state_from_params(dims, res.x));
            cycle_opt.initial_step *= opt.step_decay;
        }
        if (value < out.best_value) {
            out.best_state = state_from_params(dims, x);
            out.best_value = objective_slack(objective, out.best_state);
        }
    }
    return out;
}

}  // namespace l1coh
