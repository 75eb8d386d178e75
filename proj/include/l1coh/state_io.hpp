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

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "l1coh/state.hpp"

namespace l1coh {

using AnyState = std::variant<PureState, DensityOperator>;

inline const LocalDims &dims_of(const AnyState &s) {
    return std::visit([](const auto &x) -> const LocalDims & { return x.dims(); }, s);
}

inline DensityOperator as_density(const AnyState &s) {
    if (const auto *psi = std::get_if<PureState>(&s)) {
        return density_from_pure(*psi);
    }
    return std::get<DensityOperator>(s);
}

// State file:
//   {"dims":[d1,...,dn], "kind":"pure"|"density", "data":[[re,im],...]}
// pure: D entries; density: D*D entries in row-major order.

inline nlohmann::json state_to_json(const AnyState &s) {
    nlohmann::json j;
    j["dims"] = dims_of(s).values();
    nlohmann::json data = nlohmann::json::array();
    if (const auto *psi = std::get_if<PureState>(&s)) {
        j["kind"] = "pure";
        for (Eigen::Index i = 0; i < psi->amps().size(); ++i) {
            data.push_back({psi->amps()(i).real(), psi->amps()(i).imag()});
        }
    } else {
        const auto &m = std::get<DensityOperator>(s).mat();
        j["kind"] = "density";
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            for (Eigen::Index c = 0; c < m.cols(); ++c) {
                data.push_back({m(r, c).real(), m(r, c).imag()});
            }
        }
    }
    j["data"] = std::move(data);
    return j;
}

/// Parses and validates a state document. Malformed documents raise
/// InvariantViolation("format", ...); invalid states raise the violated
/// state invariant.
inline AnyState state_from_json(const nlohmann::json &j) {
    auto fail = [](const std::string &msg) { throw InvariantViolation("format", msg); };
    if (!j.is_object()) fail("state document must be a JSON object");
    for (const char *key : {"dims", "kind", "data"}) {
        if (!j.contains(key)) fail(std::string("missing key \"") + key + "\"");
    }
    const auto &jd = j.at("dims");
    if (!jd.is_array()) fail("\"dims\" must be an array");
    std::vector<std::size_t> dims_raw;
    for (const auto &d : jd) {
        if (!d.is_number_integer() || d.get<long long>() < 0) fail("\"dims\" entries must be non-negative integers");
        dims_raw.push_back(d.get<std::size_t>());
    }
    LocalDims dims(std::move(dims_raw));

    if (!j.at("kind").is_string()) fail("\"kind\" must be a string");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind != "pure" && kind != "density") fail("\"kind\" must be \"pure\" or \"density\", got \"" + kind + "\"");

    const auto &data = j.at("data");
    if (!data.is_array()) fail("\"data\" must be an array");
    const std::size_t expected = kind == "pure" ? dims.total() : dims.total() * dims.total();
    if (data.size() != expected) {
        fail("\"data\" has " + std::to_string(data.size()) + " entries, expected " + std::to_string(expected));
    }
    Vector flat(static_cast<Eigen::Index>(expected));
    for (std::size_t i = 0; i < expected; ++i) {
        const auto &e = data[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
            fail("\"data\"[" + std::to_string(i) + "] must be [re, im]");
        }
        flat(static_cast<Eigen::Index>(i)) = Complex(e[0].get<double>(), e[1].get<double>());
    }

    if (kind == "pure") {
        return PureState(std::move(dims), std::move(flat));
    }
    const auto d = static_cast<Eigen::Index>(dims.total());
    Matrix m(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            m(r, c) = flat(r * d + c);
        }
    }
    return DensityOperator(std::move(dims), std::move(m));
}

inline AnyState read_state(std::istream &in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error &e) {
        throw InvariantViolation("format", std::string("invalid JSON: ") + e.what());
    }
    return state_from_json(j);
}

inline AnyState read_state_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open state file " + path);
    }
    return read_state(in);
}

inline void write_state(std::ostream &out, const AnyState &s) { out << state_to_json(s).dump() << '\n'; }

inline void write_state_file(const std::string &path, const AnyState &s) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot open " + path + " for writing");
    }
    write_state(out, s);
}

}  // namespace l1coh
