/*
   Copyright 2026 The qtspec authors

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

#include "qtspec/defining_set.hpp"

#include <stdexcept>

namespace qtspec {

DefiningSet DefiningSet::from_indices(std::uint32_t m, std::span<const std::uint32_t> indices) {
    DefiningSet s = from_mask(m, 0);
    for (std::uint32_t k : indices) {
        if (k >= m) throw std::invalid_argument("index " + std::to_string(k) + " >= m");
        s.mask |= std::uint64_t{1} << k;
    }
    return s;
}

DefiningSet DefiningSet::from_mask(std::uint32_t m, std::uint64_t mask) {
    if (m == 0 || m > 64) throw std::invalid_argument("m must be in 1..64");
    DefiningSet s{m, mask};
    if (mask & ~s.universe()) throw std::invalid_argument("mask has bits at or above m");
    return s;
}

std::vector<std::uint32_t> DefiningSet::indices() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t k = 0; k < m; ++k)
        if ((mask >> k) & 1) out.push_back(k);
    return out;
}

std::vector<std::uint32_t> ConsecutiveSet::indices(std::uint32_t m) const {
    std::vector<std::uint32_t> out;
    out.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i)
        out.push_back((start + static_cast<std::uint64_t>(i) * stride) % m);
    return out;
}

std::uint64_t ConsecutiveSet::mask(std::uint32_t m) const {
    std::uint64_t out = 0;
    for (std::uint32_t k : indices(m)) out |= std::uint64_t{1} << k;
    return out;
}

} // namespace qtspec
