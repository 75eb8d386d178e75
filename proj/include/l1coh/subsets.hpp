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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "l1coh/state.hpp"

namespace l1coh {

inline std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

/// All size-m subsets of {1..n}, lexicographically ordered.
struct SubsetFamily {
    std::size_t m;
    std::size_t n;
    std::vector<SubsystemSet> members;
};

inline SubsetFamily gamma(std::size_t m, std::size_t n) {
    if (m < 1 || m > n) {
        throw DomainError("gamma: need 1 <= m <= n, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
    }
    SubsetFamily family{m, n, {}};
    family.members.reserve(binomial(n, m));
    std::vector<std::size_t> cur(m);
    for (std::size_t i = 0; i < m; ++i) cur[i] = i + 1;
    while (true) {
        family.members.emplace_back(cur);
        // Advance the rightmost position that still has room.
        std::size_t i = m;
        while (i > 0 && cur[i - 1] == n - m + i) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < m; ++j) cur[j] = cur[j - 1] + 1;
    }
    return family;
}

}  // namespace l1coh
