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

#ifndef QTSPEC_DEFINING_SET_HPP
#define QTSPEC_DEFINING_SET_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace qtspec {

/** A subset of the root indices {0, ..., m-1}, held as a bit mask.
 *  Only m <= 64 is supported; the combinatorial searches depend on it. */
struct DefiningSet {
    std::uint32_t m = 0;
    std::uint64_t mask = 0;

    /** Throws std::invalid_argument on m == 0, m > 64, or an index >= m. */
    static DefiningSet from_indices(std::uint32_t m, std::span<const std::uint32_t> indices);
    static DefiningSet from_mask(std::uint32_t m, std::uint64_t mask);

    std::uint64_t universe() const {
        return m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    }
    std::uint32_t size() const { return static_cast<std::uint32_t>(std::popcount(mask)); }
    bool empty() const { return mask == 0; }
    bool full() const { return mask == universe(); }
    bool contains(std::uint32_t k) const { return k < m && (mask >> k) & 1; }
    DefiningSet complement() const { return DefiningSet{m, universe() & ~mask}; }
    std::vector<std::uint32_t> indices() const;

    friend bool operator==(const DefiningSet&, const DefiningSet&) = default;
};

/** The index set {start + i * stride mod m : 0 <= i < count}. */
struct ConsecutiveSet {
    std::uint32_t start = 0;
    std::uint32_t stride = 1;
    std::uint32_t count = 0;

    std::vector<std::uint32_t> indices(std::uint32_t m) const;
    std::uint64_t mask(std::uint32_t m) const;

    friend bool operator==(const ConsecutiveSet&, const ConsecutiveSet&) = default;
};

} // namespace qtspec

#endif
