/*
   Copyright 2026 The qrlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <vector>

namespace qr::detail {

/// {0, 1, ..., k-1}, the lexicographically first k-subset.
inline std::vector<std::uint32_t> first_combination(std::uint32_t k) {
    std::vector<std::uint32_t> v(k);
    for (std::uint32_t i = 0; i < k; ++i) v[i] = i;
    return v;
}

/// Advances a strictly increasing k-subset of {0, ..., n-1} to its
/// lexicographic successor; false once exhausted.
inline bool next_combination(std::vector<std::uint32_t>& v, std::uint32_t n) {
    const std::size_t k = v.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (v[i] != n - k + i) {
            ++v[i];
            for (std::size_t j = i + 1; j < k; ++j) v[j] = v[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace qr::detail
