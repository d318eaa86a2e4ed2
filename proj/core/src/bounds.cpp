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

#include "qtspec/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace qtspec {

namespace {

constexpr std::uint64_t bit(std::uint32_t k) { return std::uint64_t{1} << k; }

std::uint64_t rotl_mask(std::uint64_t mask, std::uint32_t r, std::uint32_t m,
                        std::uint64_t universe) {
    r %= m;
    if (r == 0) return mask & universe;
    return ((mask << r) | (mask >> (m - r))) & universe;
}

std::uint64_t canonical_rotation(std::uint64_t mask, std::uint32_t m, std::uint64_t universe) {
    std::uint64_t best = mask, cur = mask;
    for (std::uint32_t r = 1; r < m; ++r) {
        cur = rotl_mask(cur, 1, m, universe);
        best = std::min(best, cur);
    }
    return best;
}

void require_proper(const DefiningSet& l, const char* who) {
    if (l.m == 0) throw std::invalid_argument(std::string(who) + ": empty index universe");
    if (l.empty()) throw std::invalid_argument(std::string(who) + ": empty defining set");
    if (l.full()) throw std::invalid_argument(std::string(who) + ": defining set is everything");
}

std::vector<std::uint32_t> strides_for(std::uint32_t m, StridePolicy policy) {
    if (policy == StridePolicy::unit) return {1};
    std::vector<std::uint32_t> out;
    for (std::uint32_t n = 1; n < m; ++n)
        if (std::gcd(n, m) == 1) out.push_back(n);
    if (out.empty()) out.push_back(1); // m == 1 never reaches the searches
    return out;
}

/**
 * Core of the two-set searches.  For every consecutive N (coprime stride,
 * grown while some position can carry all its translates) and every stride
 * n2, slides a window over the positions b + y * n2 and reports each window
 * whose ends are marked and whose hole count stays below d_N - 1.  Marked
 * means the position v satisfies v + N inside L.
 */
struct RoosRaw {
    std::uint32_t a, n1, len, d_n, n2, st, win_len, marked;
    std::uint64_t ln; // positions carrying every translate by N
};

template <typename Visit>
void roos_search(const DefiningSet& l, const SearchCaps& caps, bool dn_from_ht, Visit&& visit) {
    const std::uint32_t m = l.m;
    const std::uint64_t universe = l.universe();
    const std::vector<std::uint32_t> strides = strides_for(m, StridePolicy::coprime);
    const std::uint32_t cap_len = std::min(caps.mprime_cap, m);
    std::unordered_set<std::uint64_t> seen_n;

    for (std::uint32_t n1 : strides) {
        for (std::uint32_t a = 0; a < m; ++a) {
            std::uint64_t nmask = 0, ln = l.mask;
            for (std::uint32_t len = 1; len <= m; ++len) {
                const std::uint32_t elem =
                    static_cast<std::uint32_t>((a + std::uint64_t{len - 1} * n1) % m);
                nmask |= bit(elem);
                ln &= rotl_mask(l.mask, (m - elem) % m, m, universe);
                if (ln == 0) break;
                if (!seen_n.insert(nmask).second) continue;

                std::uint32_t d_n = len + 1;
                if (dn_from_ht && len >= 1 && nmask != universe) {
                    // equal for pure runs, but keeps d_N honest either way
                    d_n = std::max<std::uint32_t>(
                        d_n, static_cast<std::uint32_t>(
                                 ht_bound(DefiningSet{m, nmask}, caps).value));
                }
                const std::uint32_t hole_cap = d_n - 2;

                for (std::uint32_t n2 : strides) {
                    std::uint64_t ring = 0; // bit i set iff i * n2 carries N
                    for (std::uint32_t i = 0; i < m; ++i)
                        if ((ln >> (std::uint64_t{i} * n2 % m)) & 1) ring |= bit(i);
                    for (std::uint32_t st = 0; st < m; ++st) {
                        if (!((ring >> st) & 1)) continue;
                        std::uint32_t marked = 0;
                        for (std::uint32_t d = 0; d < cap_len; ++d) {
                            const std::uint32_t i = (st + d) % m;
                            const bool mk = (ring >> i) & 1;
                            if (mk) ++marked;
                            if (d + 1 - marked > hole_cap) break;
                            if (mk)
                                visit(RoosRaw{a, n1, len, d_n, n2, st, d + 1, marked, ln});
                        }
                    }
                }
            }
        }
    }
}

std::uint64_t materialize_m(const RoosRaw& c, std::uint32_t m) {
    std::uint64_t mask = 0;
    for (std::uint32_t d = 0; d < c.win_len; ++d) {
        const std::uint32_t p =
            static_cast<std::uint32_t>(std::uint64_t{(c.st + d) % m} * c.n2 % m);
        if ((c.ln >> p) & 1) mask |= bit(p);
    }
    return mask;
}

ConsecutiveSet mprime_of(const RoosRaw& c, std::uint32_t m) {
    return ConsecutiveSet{static_cast<std::uint32_t>(std::uint64_t{c.st} * c.n2 % m), c.n2,
                          c.win_len};
}

/** Largest independent set buildable wrt S: breadth-first over canonical
 *  rotation classes of the sets that can still be rotated inside S, one
 *  level per size.  Every growth step rotates inside S and adjoins an
 *  outside index, so the answer is the deepest level plus one. */
struct IndepOutcome {
    std::uint64_t value;
    bool capped; // value is only a floor: the search stopped at the cutoff
    std::vector<ShiftStep> steps;
    std::uint64_t final_mask;
};

IndepOutcome max_independent(std::uint32_t m, std::uint64_t s_mask, std::uint64_t universe,
                             std::uint64_t state_cap, std::uint64_t cutoff, bool want_trace) {
    struct Node {
        std::uint64_t parent;
        std::uint32_t pre, add;
    };
    std::vector<std::uint32_t> outside;
    for (std::uint32_t b = 0; b < m; ++b)
        if ((universe >> b & 1) && !((s_mask >> b) & 1)) outside.push_back(b);

    std::unordered_map<std::uint64_t, Node> visited;
    visited.emplace(0, Node{0, 0, 0});
    std::vector<std::uint64_t> frontier{0};
    std::uint64_t k_max = 0, top = 0;

    while (!frontier.empty()) {
        if (cutoff != 0 && k_max + 1 >= cutoff)
            return IndepOutcome{cutoff, true, {}, 0};
        std::vector<std::uint64_t> next;
        for (std::uint64_t a : frontier) {
            for (std::uint32_t r = 0; r < (a == 0 ? 1u : m); ++r) {
                const std::uint64_t ar = rotl_mask(a, r, m, universe);
                if (ar & ~s_mask) continue;
                for (std::uint32_t b : outside) {
                    const std::uint64_t grown = ar | bit(b);
                    const std::uint64_t canon = canonical_rotation(grown, m, universe);
                    if (visited.count(canon)) continue;
                    bool inside = false;
                    for (std::uint32_t j = 0; j < m && !inside; ++j)
                        inside = (rotl_mask(grown, j, m, universe) & ~s_mask) == 0;
                    if (!inside) continue;
                    if (visited.size() >= state_cap)
                        throw std::runtime_error(
                            "independent set search exceeded the state cap");
                    visited.emplace(canon, Node{a, r, b});
                    next.push_back(canon);
                }
            }
        }
        if (!next.empty()) {
            ++k_max;
            top = next.front();
        }
        frontier = std::move(next);
    }

    IndepOutcome out{k_max + 1, false, {}, 0};
    if (!want_trace) return out;

    std::vector<std::pair<std::uint32_t, std::uint32_t>> chain; // canonical-relative steps
    for (std::uint64_t c = top; c != 0; c = visited.at(c).parent)
        chain.emplace_back(visited.at(c).pre, visited.at(c).add);
    std::reverse(chain.begin(), chain.end());

    std::uint64_t actual = 0;
    std::uint32_t delta = 0; // rotation taking the actual set to its canonical form
    for (const auto& [r, b] : chain) {
        const std::uint32_t rot = (delta + r) % m;
        actual = rotl_mask(actual, rot, m, universe) | bit(b);
        out.steps.push_back(ShiftStep{rot, b});
        const std::uint64_t canon = canonical_rotation(actual, m, universe);
        for (delta = 0; rotl_mask(actual, delta, m, universe) != canon; ++delta) {}
    }
    std::uint32_t rho = 0;
    while (rotl_mask(actual, rho, m, universe) & ~s_mask) ++rho; // exists by construction
    actual = rotl_mask(actual, rho, m, universe) | bit(outside.front());
    out.steps.push_back(ShiftStep{rho, outside.front()});
    out.final_mask = actual;
    return out;
}

std::vector<std::uint64_t> orbit_masks(const RootSystem& rs) {
    std::vector<std::uint64_t> out;
    std::uint64_t seen = 0;
    for (std::uint32_t k = 0; k < rs.m(); ++k) {
        if ((seen >> k) & 1) continue;
        std::uint64_t mask = 0;
        for (std::uint32_t i : rs.frobenius_orbit(k)) mask |= bit(i);
        out.push_back(mask);
        seen |= mask;
    }
    return out;
}

/** Over GF(2) a codeword's weight parity equals its value at 1: a zero set
 *  that omits exponent 0 forces odd weight, one that contains it forces even
 *  weight.  Rounds a weight lower bound up to the parity the set requires. */
std::uint64_t parity_refined(std::uint64_t value, std::uint64_t s_mask, bool active) {
    if (!active) return value;
    const std::uint64_t want_odd = (s_mask & 1) ^ 1;
    return value + ((value & 1) != want_odd ? 1 : 0);
}

/** True when the row space of `basis` over an extension field is spanned by
 *  vectors with all entries in the prime base field.  In that case every
 *  nonzero functional on the space is nonzero on some base-field vector, so
 *  base-field facts such as binary weight parity transfer through it. */
bool base_field_spanned(const Matrix& basis, const FieldPtr& base) {
    if (base->s() != 1 || basis.field()->p() != base->p()) return false;
    const std::size_t r = basis.rows(), l = basis.cols();
    const FieldPtr& ext = basis.field();
    const std::uint64_t p = ext->p();
    const std::uint32_t s = ext->s();
    if (r == 0 || s == 1) return true;

    // Expand to GF(p): the row space as a p-ary space in power-basis
    // coordinates, stacked over the all-coordinates-rational subspace.
    const FieldPtr fp = Field::make(p, 1);
    Matrix u{fp, r * s, l * s};
    for (std::size_t i = 0; i < r; ++i) {
        elem_t scale = 1;
        for (std::uint32_t t = 0; t < s; ++t) {
            for (std::size_t c = 0; c < l; ++c) {
                elem_t e = ext->mul(scale, basis.at(i, c));
                for (std::uint32_t d = 0; d < s; ++d) {
                    u.set(i * s + t, c * s + d, e % p);
                    e /= p;
                }
            }
            scale = ext->mul(scale, p); // label p is the power-basis generator
        }
    }
    Matrix stacked{fp, r * s + l, l * s};
    for (std::size_t i = 0; i < r * s; ++i)
        for (std::size_t c = 0; c < l * s; ++c) stacked.set(i, c, u.at(i, c));
    for (std::size_t i = 0; i < l; ++i) stacked.set(r * s + i, i * s, 1);
    // dim of (row space intersect base-field vectors) via the rank formula;
    // the space is base-spanned exactly when that dimension reaches r
    return u.rank() + l - stacked.rank() == r;
}

/** Minimum over closed S between `floor_mask` and the universe (exclusive)
 *  of the largest independent set wrt S, where S ranges over floor_mask plus
 *  unions of the given orbits.  Stops refining at `clamp` when nonzero.
 *  Returns the minimum (or the clamp) and the minimizing S, 0 if clamped. */
struct InnerMin {
    std::uint64_t value;
    std::uint64_t s_min; // 0 when every candidate stopped at the clamp
};

InnerMin min_independent_over(std::uint32_t m, std::uint64_t floor_mask,
                              const std::vector<std::uint64_t>& orbits, std::uint64_t universe,
                              std::uint64_t state_cap, std::uint64_t clamp, bool parity) {
    if (orbits.size() > 24) throw std::runtime_error("too many orbit unions to enumerate");
    std::vector<std::uint64_t> cands;
    for (std::uint64_t ss = 0; ss < (std::uint64_t{1} << orbits.size()); ++ss) {
        std::uint64_t s = floor_mask;
        for (std::size_t i = 0; i < orbits.size(); ++i)
            if ((ss >> i) & 1) s |= orbits[i];
        if (s != universe) cands.push_back(s);
    }
    std::sort(cands.begin(), cands.end(), [](std::uint64_t x, std::uint64_t y) {
        const int px = std::popcount(x), py = std::popcount(y);
        return px != py ? px < py : x < y;
    });
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    InnerMin best{0, 0};
    bool have = false;
    for (std::uint64_t s : cands) {
        std::uint64_t cutoff = clamp;
        if (have) cutoff = cutoff == 0 ? best.value : std::min(cutoff, best.value);
        const IndepOutcome out = max_independent(m, s, universe, state_cap, cutoff, false);
        if (out.capped) continue;
        const std::uint64_t refined = parity_refined(out.value, s, parity);
        if (!have || refined < best.value) {
            best = InnerMin{refined, s};
            have = true;
        }
    }
    if (!have) return InnerMin{clamp, 0}; // everything stopped at the clamp
    if (clamp != 0 && best.value >= clamp) return InnerMin{clamp, 0};
    return best;
}

std::uint64_t checked_closure(const RootSystem& rs, std::uint64_t mask,
                              std::uint64_t omega_bar_mask) {
    const std::uint64_t closed = rs.closure(mask);
    if (closed & ~omega_bar_mask)
        throw std::logic_error("closure escaped the eigenvalue set");
    return closed;
}

Distance eigen_distance_of(const QtCode& code, std::uint64_t mask, std::uint32_t m,
                           std::unordered_map<std::uint64_t, Distance>& cache) {
    const auto it = cache.find(mask);
    if (it != cache.end()) return it->second;
    const std::vector<std::uint32_t> idx = DefiningSet{m, mask}.indices();
    const Distance d = eigencode(code, common_eigenspace(code, idx)).distance;
    cache.emplace(mask, d);
    return d;
}

struct EigenInfo {
    Distance distance;
    bool base_spanned;
};

EigenInfo eigen_info_of(const QtCode& code, std::uint64_t mask, std::uint32_t m,
                        std::unordered_map<std::uint64_t, EigenInfo>& cache) {
    const auto it = cache.find(mask);
    if (it != cache.end()) return it->second;
    const std::vector<std::uint32_t> idx = DefiningSet{m, mask}.indices();
    const Matrix basis = common_eigenspace(code, idx);
    const EigenInfo info{eigencode(code, basis).distance,
                         base_field_spanned(basis, code.field())};
    cache.emplace(mask, info);
    return info;
}

/** Shared entry checks for the eigenvalue-set bounds: a nonempty proper
 *  omega_bar with m small enough for masks. */
SpectralData checked_spectral_data(const QtCode& code, const char* who) {
    if (code.m() > 64)
        throw std::invalid_argument(std::string(who) + ": m must be at most 64");
    SpectralData sd = spectral_data(code);
    const std::uint64_t universe = DefiningSet{code.m(), 0}.universe();
    if (sd.omega_bar_mask == 0)
        throw std::invalid_argument(std::string(who) + ": code has no eigenvalues");
    if (sd.omega_bar_mask == universe)
        throw std::invalid_argument(std::string(who) + ": every root is an eigenvalue");
    return sd;
}

} // namespace

BchResult bch_bound(const DefiningSet& l, StridePolicy policy) {
    require_proper(l, "bch_bound");
    const std::uint32_t m = l.m;
    BchResult best{0, policy, ConsecutiveSet{0, 1, 0}};
    for (std::uint32_t n : strides_for(m, policy)) {
        for (std::uint32_t e = 0; e < m; ++e) {
            std::uint32_t cnt = 0, pos = e;
            while (cnt < m && l.contains(pos)) {
                ++cnt;
                pos = static_cast<std::uint32_t>((pos + std::uint64_t{n}) % m);
            }
            if (cnt + std::uint64_t{1} > best.value)
                best = BchResult{cnt + std::uint64_t{1}, policy, ConsecutiveSet{e, n, cnt}};
        }
    }
    return best;
}

HtResult ht_bound(const DefiningSet& l, const SearchCaps& caps) {
    require_proper(l, "ht_bound");
    const std::uint32_t m = l.m;
    const std::uint64_t universe = l.universe();
    HtResult best{0, 0, 0, 0, 0, 0};
    const std::vector<std::uint32_t> n1s =
        strides_for(m, caps.ht_general_n1 ? StridePolicy::coprime : StridePolicy::unit);
    for (std::uint32_t n1 : n1s) {
        for (std::uint32_t e = 0; e < m; ++e) {
            std::uint64_t run = 0;
            for (std::uint32_t delta = 2; delta <= m + 1; ++delta) {
                const std::uint32_t pos =
                    static_cast<std::uint32_t>((e + std::uint64_t{delta - 2} * n1) % m);
                if (!l.contains(pos)) break;
                run |= bit(pos);
                if (delta > best.value) best = HtResult{delta, e, delta, n1, 1, 0};
                for (std::uint32_t n2 = 1; n2 < m; ++n2) {
                    const std::uint32_t g2 = std::gcd(n2, m);
                    if (g2 >= delta) continue;
                    const std::uint32_t ord2 = m / g2;
                    std::uint32_t s = 0;
                    while (s + 1 < ord2) {
                        const std::uint64_t shifted =
                            rotl_mask(run, static_cast<std::uint32_t>(
                                               std::uint64_t{s + 1} * n2 % m),
                                      m, universe);
                        if (shifted & ~l.mask) break;
                        ++s;
                    }
                    if (delta + std::uint64_t{s} > best.value)
                        best = HtResult{delta + std::uint64_t{s}, e, delta, n1, n2, s};
                }
            }
        }
    }
    return best;
}

RoosResult roos_bound(const DefiningSet& l, const SearchCaps& caps) {
    require_proper(l, "roos_bound");
    const std::uint32_t m = l.m;
    RoosResult best{0, ConsecutiveSet{0, 1, 0}, ConsecutiveSet{0, 1, 0}, DefiningSet{m, 0}, 0};
    roos_search(l, caps, caps.roos_dn_from_ht, [&](const RoosRaw& c) {
        const std::uint64_t value = c.marked + std::uint64_t{c.d_n} - 1;
        if (value <= best.value) return;
        best = RoosResult{value, ConsecutiveSet{c.a, c.n1, c.len}, mprime_of(c, m),
                          DefiningSet{m, materialize_m(c, m)}, c.d_n};
    });
    return best;
}

ShiftResult shift_bound(const RootSystem& rs, const DefiningSet& l, const SearchCaps& caps) {
    require_proper(l, "shift_bound");
    if (l.m != rs.m()) throw std::invalid_argument("shift_bound: set is for a different m");
    if (!rs.is_closed(l.mask))
        throw std::invalid_argument("shift_bound: defining set must be Frobenius closed");

    const std::uint32_t m = l.m;
    const std::uint64_t universe = l.universe();
    std::vector<std::uint64_t> outside_orbits;
    for (std::uint64_t orb : orbit_masks(rs))
        if (!(orb & l.mask)) outside_orbits.push_back(orb);

    const bool parity = rs.base()->q() == 2;
    const InnerMin inner = min_independent_over(m, l.mask, outside_orbits, universe,
                                                caps.shift_state_cap, 0, parity);
    const IndepOutcome traced =
        max_independent(m, inner.s_min, universe, caps.shift_state_cap, 0, true);
    const auto a_size = static_cast<std::uint64_t>(std::popcount(traced.final_mask));
    return ShiftResult{inner.value, DefiningSet{m, inner.s_min}, traced.steps,
                       DefiningSet{m, traced.final_mask}, inner.value != a_size};
}

bool replay_bch(const BchResult& r, const DefiningSet& l) {
    if (r.run.count < 1 || r.run.count > l.m) return false;
    if (r.value != r.run.count + std::uint64_t{1}) return false;
    if (r.policy == StridePolicy::unit && r.run.stride != 1) return false;
    if (std::gcd(r.run.stride, l.m) != 1) return false;
    for (std::uint32_t k : r.run.indices(l.m))
        if (!l.contains(k)) return false;
    return true;
}

bool replay_ht(const HtResult& r, const DefiningSet& l) {
    const std::uint32_t m = l.m;
    if (r.delta < 2 || r.n1 == 0 || r.n1 >= m || r.n2 == 0 || r.n2 >= m) return false;
    if (std::gcd(r.n1, m) != 1) return false;
    const std::uint32_t g2 = std::gcd(r.n2, m);
    if (g2 >= r.delta) return false;
    if (r.s + 1 > m / g2) return false;
    if (r.value != r.delta + std::uint64_t{r.s}) return false;
    for (std::uint32_t z = 0; z + 2 <= r.delta; ++z)
        for (std::uint32_t y = 0; y <= r.s; ++y) {
            const std::uint32_t k = static_cast<std::uint32_t>(
                (r.e + std::uint64_t{z} * r.n1 + std::uint64_t{y} * r.n2) % m);
            if (!l.contains(k)) return false;
        }
    return true;
}

bool replay_roos(const RoosResult& r, const DefiningSet& l) {
    const std::uint32_t m = l.m;
    if (r.n.count < 1 || r.n.count > m || std::gcd(r.n.stride, m) != 1) return false;
    if (r.mprime.count < 1 || r.mprime.count > m || std::gcd(r.mprime.stride, m) != 1)
        return false;

    const std::uint64_t nmask = r.n.mask(m);
    if (std::popcount(nmask) != static_cast<int>(r.n.count)) return false;
    const std::uint32_t straight = r.n.count + 1;
    if (r.d_n < straight) return false;
    if (r.d_n > straight) {
        // only a translate-pattern estimate may exceed run length + 1
        if (nmask == 0 || nmask == l.universe()) return false;
        if (r.d_n > ht_bound(DefiningSet{m, nmask}).value) return false;
    }

    std::uint64_t ln = l.mask;
    for (std::uint32_t u : r.n.indices(m)) ln &= rotl_mask(l.mask, (m - u) % m, m, l.universe());

    const std::uint64_t mm = r.m_set.mask;
    if (mm == 0 || (mm & ~ln)) return false;
    const std::uint64_t mpmask = r.mprime.mask(m);
    if (std::popcount(mpmask) != static_cast<int>(r.mprime.count)) return false;
    if (mm & ~mpmask) return false;
    const std::vector<std::uint32_t> mp = r.mprime.indices(m);
    if (!((mm >> mp.front()) & 1) || !((mm >> mp.back()) & 1)) return false;
    if (r.mprime.count > r.m_set.size() + std::uint64_t{r.d_n} - 2) return false;
    return r.value == r.m_set.size() + std::uint64_t{r.d_n} - 1;
}

bool replay_shift(const ShiftResult& r, const RootSystem& rs, const DefiningSet& l) {
    const std::uint32_t m = l.m;
    const std::uint64_t universe = l.universe();
    const std::uint64_t s = r.s_min.mask;
    if (l.mask & ~s) return false;
    if (s == universe) return false;
    if (!rs.is_closed(s)) return false;

    std::uint64_t a = 0;
    for (const ShiftStep& step : r.steps) {
        a = rotl_mask(a, step.rotation, m, universe);
        if (a & ~s) return false;
        if (step.added >= m || ((s >> step.added) & 1)) return false;
        a |= bit(step.added);
    }
    if (a != r.a_set.mask) return false;
    const auto a_size = static_cast<std::uint64_t>(std::popcount(a));
    if (!r.parity_bump) return r.value == a_size;
    if (rs.base()->q() != 2) return false;
    // the bump is justified only when the witness size has the wrong parity
    const std::uint64_t want_odd = (s & 1) ^ 1;
    if ((a_size & 1) == want_odd) return false;
    return r.value == a_size + 1;
}

SpectralResult spectral_bound(const QtCode& code, const DefiningSet& p, DpSource source,
                              const SearchCaps& caps, const OracleConfig& oracle_cfg) {
    const SpectralData sd = checked_spectral_data(code, "spectral_bound");
    const RootSystem& rs = *sd.roots;
    const std::uint32_t m = code.m();
    if (p.m != m) throw std::invalid_argument("spectral_bound: set is for a different m");
    if (p.empty()) throw std::invalid_argument("spectral_bound: empty eigenvalue set");
    if (p.mask & ~sd.omega_bar_mask)
        throw std::invalid_argument("spectral_bound: set contains non-eigenvalues");

    const DefiningSet t{m, checked_closure(rs, p.mask, sd.omega_bar_mask)};
    const std::vector<std::uint32_t> idx = t.indices();
    const Matrix eigenbasis = common_eigenspace(code, idx);

    std::uint64_t d_p = 0;
    switch (source) {
        case DpSource::bch: d_p = bch_bound(t, StridePolicy::unit).value; break;
        case DpSource::ht: d_p = ht_bound(t, caps).value; break;
        case DpSource::roos: d_p = roos_bound(t, caps).value; break;
        case DpSource::shift: {
            const ShiftResult sr = shift_bound(rs, t, caps);
            d_p = sr.value;
            // the weight-parity round-up only transfers through an eigenspace
            // with a full base-field basis
            if (sr.parity_bump && !base_field_spanned(eigenbasis, code.field())) --d_p;
            break;
        }
        case DpSource::oracle: {
            const Poly g = constacyclic_from_defining_set(rs, t);
            d_p = min_distance(constacyclic_generator_matrix(g, m), oracle_cfg);
            break;
        }
    }

    const Distance eigen = eigencode(code, eigenbasis).distance;
    const Distance value = min(Distance::finite(d_p), eigen);
    return SpectralResult{value.value(), p, t, source, d_p, eigen};
}

SpectralRoosResult spectral_roos(const QtCode& code, const SearchCaps& caps) {
    const SpectralData sd = checked_spectral_data(code, "spectral_roos");
    const std::uint32_t m = code.m();
    const DefiningSet l{m, sd.omega_bar_mask};
    std::unordered_map<std::uint64_t, Distance> cache;

    SpectralRoosResult best{0,
                            ConsecutiveSet{0, 1, 0},
                            ConsecutiveSet{0, 1, 0},
                            DefiningSet{m, 0},
                            DefiningSet{m, 0},
                            0,
                            Distance::infinity()};
    roos_search(l, caps, caps.roos_dn_from_ht, [&](const RoosRaw& c) {
        const std::uint64_t rank_value = c.marked + std::uint64_t{c.d_n} - 1;
        if (rank_value <= best.value) return;
        const std::uint64_t mm = materialize_m(c, m);
        std::uint64_t mn = 0;
        for (std::uint32_t u : ConsecutiveSet{c.a, c.n1, c.len}.indices(m))
            mn |= rotl_mask(mm, u, m, l.universe());
        const Distance eigen = eigen_distance_of(code, mn, m, cache);
        const std::uint64_t value =
            eigen.is_finite() ? std::min(rank_value, eigen.value()) : rank_value;
        if (value <= best.value) return;
        best = SpectralRoosResult{value,
                                  ConsecutiveSet{c.a, c.n1, c.len},
                                  mprime_of(c, m),
                                  DefiningSet{m, mm},
                                  DefiningSet{m, mn},
                                  c.d_n,
                                  eigen};
    });
    return best;
}

SpectralShiftResult spectral_shift(const QtCode& code, const SearchCaps& caps) {
    const SpectralData sd = checked_spectral_data(code, "spectral_shift");
    const RootSystem& rs = *sd.roots;
    const std::uint32_t m = code.m();
    const std::uint64_t universe = DefiningSet{m, 0}.universe();

    std::vector<std::uint64_t> inside, outside;
    for (std::uint64_t orb : orbit_masks(rs)) {
        if ((orb & sd.omega_bar_mask) == orb)
            inside.push_back(orb);
        else if (!(orb & sd.omega_bar_mask))
            outside.push_back(orb);
        else
            throw std::logic_error("eigenvalue set is not a union of orbits");
    }
    if (inside.size() > 16)
        throw std::runtime_error("too many eigenvalue orbits to enumerate");

    std::unordered_map<std::uint64_t, EigenInfo> cache;
    const bool binary = code.field()->q() == 2;
    bool have = false;
    SpectralShiftResult best{0,
                             DefiningSet{m, 0},
                             Distance::infinity(),
                             0,
                             DefiningSet{m, 0},
                             {},
                             DefiningSet{m, 0},
                             false};
    for (std::uint64_t ts = 1; ts < (std::uint64_t{1} << inside.size()); ++ts) {
        std::uint64_t t_mask = 0;
        std::vector<std::uint64_t> others = outside;
        for (std::size_t i = 0; i < inside.size(); ++i) {
            if ((ts >> i) & 1)
                t_mask |= inside[i];
            else
                others.push_back(inside[i]);
        }
        const EigenInfo info = eigen_info_of(code, t_mask, m, cache);
        const Distance eigen = info.distance;
        const std::uint64_t clamp = eigen.is_finite() ? eigen.value() : 0;
        const InnerMin inner = min_independent_over(m, t_mask, others, universe,
                                                    caps.shift_state_cap, clamp,
                                                    binary && info.base_spanned);
        const Distance term = min(eigen, Distance::finite(inner.value));
        if (!have || term > Distance::finite(best.value)) {
            best = SpectralShiftResult{term.value(),
                                       DefiningSet{m, t_mask},
                                       eigen,
                                       inner.value,
                                       DefiningSet{m, inner.s_min},
                                       {},
                                       DefiningSet{m, 0},
                                       false};
            have = true;
        }
    }
    if (best.s_min.mask != 0) {
        const IndepOutcome traced = max_independent(m, best.s_min.mask, universe,
                                                    caps.shift_state_cap, 0, true);
        best.steps = traced.steps;
        best.a_set = DefiningSet{m, traced.final_mask};
        best.parity_bump =
            best.independent_value !=
            static_cast<std::uint64_t>(std::popcount(traced.final_mask));
    }
    return best;
}

QtBchResult qt_bch_bound(const QtCode& code, StridePolicy policy) {
    if (code.m() > 64)
        throw std::invalid_argument("qt_bch_bound: m must be at most 64");
    const SpectralData sd = spectral_data(code);
    if (sd.omega_bar_mask == 0)
        throw std::invalid_argument("qt_bch_bound: code has no eigenvalues");
    const std::uint32_t m = code.m();
    std::unordered_map<std::uint64_t, Distance> cache;

    QtBchResult best{0, ConsecutiveSet{0, 1, 0}, Distance::infinity()};
    for (std::uint32_t n : strides_for(m, policy)) {
        for (std::uint32_t e = 0; e < m; ++e) {
            std::uint64_t run = 0;
            for (std::uint32_t cnt = 1; cnt <= m; ++cnt) {
                const std::uint32_t pos =
                    static_cast<std::uint32_t>((e + std::uint64_t{cnt - 1} * n) % m);
                if (!((sd.omega_bar_mask >> pos) & 1)) break;
                if ((run >> pos) & 1) break; // wrapped all the way around
                run |= bit(pos);
                const std::uint64_t rank_value = cnt + std::uint64_t{1};
                if (rank_value <= best.value) continue;
                const Distance eigen = eigen_distance_of(code, run, m, cache);
                const std::uint64_t value =
                    eigen.is_finite() ? std::min(rank_value, eigen.value()) : rank_value;
                if (value > best.value)
                    best = QtBchResult{value, ConsecutiveSet{e, n, cnt}, eigen};
            }
        }
    }
    return best;
}

QtHtResult qt_ht_bound(const QtCode& code, const SearchCaps& caps) {
    if (code.m() > 64)
        throw std::invalid_argument("qt_ht_bound: m must be at most 64");
    const SpectralData sd = spectral_data(code);
    if (sd.omega_bar_mask == 0)
        throw std::invalid_argument("qt_ht_bound: code has no eigenvalues");
    const std::uint32_t m = code.m();
    const std::uint64_t universe = DefiningSet{m, 0}.universe();
    std::unordered_map<std::uint64_t, Distance> cache;

    auto consider = [&](QtHtResult& best, std::uint64_t d_mask, std::uint64_t rank_value,
                        std::uint32_t e, std::uint32_t delta, std::uint32_t n1,
                        std::uint32_t n2, std::uint32_t s) {
        if (rank_value <= best.value) return;
        const Distance eigen = eigen_distance_of(code, d_mask, m, cache);
        const std::uint64_t value =
            eigen.is_finite() ? std::min(rank_value, eigen.value()) : rank_value;
        if (value > best.value) best = QtHtResult{value, e, delta, n1, n2, s, eigen};
    };

    QtHtResult best{0, 0, 0, 0, 0, 0, Distance::infinity()};
    const std::vector<std::uint32_t> n1s =
        strides_for(m, caps.ht_general_n1 ? StridePolicy::coprime : StridePolicy::unit);
    for (std::uint32_t n1 : n1s) {
        for (std::uint32_t e = 0; e < m; ++e) {
            std::uint64_t run = 0;
            for (std::uint32_t delta = 2; delta <= m + 1; ++delta) {
                const std::uint32_t pos =
                    static_cast<std::uint32_t>((e + std::uint64_t{delta - 2} * n1) % m);
                if (!((sd.omega_bar_mask >> pos) & 1)) break;
                if ((run >> pos) & 1) break;
                run |= bit(pos);
                consider(best, run, delta, e, delta, n1, 1, 0);
                for (std::uint32_t n2 = 1; n2 < m; ++n2) {
                    const std::uint32_t g2 = std::gcd(n2, m);
                    if (g2 >= delta) continue;
                    const std::uint32_t ord2 = m / g2;
                    std::uint64_t d_mask = run;
                    for (std::uint32_t s = 1; s < ord2; ++s) {
                        const std::uint64_t shifted = rotl_mask(
                            run, static_cast<std::uint32_t>(std::uint64_t{s} * n2 % m), m,
                            universe);
                        if (shifted & ~sd.omega_bar_mask) break;
                        d_mask |= shifted;
                        consider(best, d_mask, delta + std::uint64_t{s}, e, delta, n1, n2, s);
                    }
                }
            }
        }
    }
    return best;
}

} // namespace qtspec
