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

#ifndef QTSPEC_BOUNDS_HPP
#define QTSPEC_BOUNDS_HPP

#include <cstdint>
#include <vector>

#include "qtspec/defining_set.hpp"
#include "qtspec/oracle.hpp"
#include "qtspec/qt_code.hpp"
#include "qtspec/root_system.hpp"
#include "qtspec/spectral.hpp"

namespace qtspec {

/** Stride set searched for consecutive runs: only 1, or every stride
 *  coprime to m. */
enum class StridePolicy { unit, coprime };

/** Where the constacyclic distance estimate of a closed index set comes
 *  from inside spectral_bound. */
enum class DpSource { bch, ht, roos, shift, oracle };

struct SearchCaps {
    /** Independent-set searches throw std::runtime_error past this many
     *  visited states; results are never silently truncated. */
    std::uint64_t shift_state_cap = std::uint64_t{1} << 22;
    /** Longest consecutive superset M' considered by the two-set searches. */
    std::uint32_t mprime_cap = 20;
    /** Let the translate-pattern search vary the run stride n1 over all
     *  strides coprime to m instead of fixing n1 = 1. */
    bool ht_general_n1 = false;
    /** Estimate the distance of the consecutive set N by the translate
     *  pattern bound instead of run length + 1 (equal for pure runs, so this
     *  is off by default). */
    bool roos_dn_from_ht = false;
};

/** Consecutive run E of delta - 1 = run.count elements inside L certifies
 *  distance >= delta. */
struct BchResult {
    std::uint64_t value;
    StridePolicy policy;
    ConsecutiveSet run;
};

/** Run of delta - 1 elements with stride n1 from e, all of whose translates
 *  by y * n2 for 0 <= y <= s stay inside L, certifies distance >= delta + s.
 *  Requires gcd(n1, m) = 1, gcd(n2, m) < delta, and s below the additive
 *  order of n2 so the translates are distinct. */
struct HtResult {
    std::uint64_t value;
    std::uint32_t e, delta, n1, n2, s;
};

/** Consecutive set N and a set M inside a consecutive superset M' (same
 *  stride, both endpoints in M) with |M'| <= |M| + d_N - 2, where every
 *  element of M + N lies in L and d_N = |N| + 1: certifies
 *  distance >= |M| + d_N - 1. */
struct RoosResult {
    std::uint64_t value;
    ConsecutiveSet n;
    ConsecutiveSet mprime;
    DefiningSet m_set;
    std::uint32_t d_n;
};

/** One growth step of an independent set: rotate the current set by
 *  `rotation` index positions (it must land inside S), then adjoin the
 *  index `added`, which must lie outside S. */
struct ShiftStep {
    std::uint32_t rotation;
    std::uint32_t added;
};

/** Minimum over closed S with L <= S < full of the largest independent set
 *  buildable wrt S; steps replay the witness set for the minimizing S. */
struct ShiftResult {
    std::uint64_t value;
    DefiningSet s_min;
    std::vector<ShiftStep> steps;
    DefiningSet a_set; // the replayed witness; |a_set| == value unless parity_bump
    // Over GF(2) a codeword's weight parity equals its value at 1, so the zero
    // set s_min forces the weight's parity and the bound rounds up by one when
    // the witness size has the wrong parity.
    bool parity_bump;
};

BchResult bch_bound(const DefiningSet& l, StridePolicy policy = StridePolicy::unit);
HtResult ht_bound(const DefiningSet& l, const SearchCaps& caps = {});
RoosResult roos_bound(const DefiningSet& l, const SearchCaps& caps = {});
/** L must be nonempty, proper, and Frobenius closed. */
ShiftResult shift_bound(const RootSystem& rs, const DefiningSet& l,
                        const SearchCaps& caps = {});

bool replay_bch(const BchResult& r, const DefiningSet& l);
bool replay_ht(const HtResult& r, const DefiningSet& l);
bool replay_roos(const RoosResult& r, const DefiningSet& l);
bool replay_shift(const ShiftResult& r, const RootSystem& rs, const DefiningSet& l);

/**
 * The eigenvalue-set bound for a code with eigenvalue indices
 * 0 < |omega_bar| < m: requested P is closed up to T, and the result is
 * min(d_P, d(eigencode of the common eigenspace over T)), where d_P bounds
 * the constacyclic code with defining set T by the chosen source.  Closing
 * both sides keeps the estimate valid for every input P.
 */
struct SpectralResult {
    std::uint64_t value;
    DefiningSet p_requested;
    DefiningSet p_closed;
    DpSource source;
    std::uint64_t d_p;
    Distance eigen_distance;
};

SpectralResult spectral_bound(const QtCode& code, const DefiningSet& p, DpSource source,
                              const SearchCaps& caps = {},
                              const OracleConfig& oracle_cfg = {});

/** Two-set search run inside the eigenvalue indices: every candidate (M, N)
 *  with M + N inside omega_bar is worth min(|M| + d_N - 1, d(eigencode over
 *  M + N)), and the best candidate wins. */
struct SpectralRoosResult {
    std::uint64_t value;
    ConsecutiveSet n;
    ConsecutiveSet mprime;
    DefiningSet m_set;
    DefiningSet mn_set;
    std::uint32_t d_n;
    Distance eigen_distance;
};

SpectralRoosResult spectral_roos(const QtCode& code, const SearchCaps& caps = {});

/** Independent-set bound over the eigenvalues: the best closed nonempty
 *  T inside omega_bar of min(d(eigencode over T), min over closed S with
 *  T <= S < full of the largest independent set wrt S). */
struct SpectralShiftResult {
    std::uint64_t value;
    DefiningSet t_set;
    Distance eigen_distance;
    std::uint64_t independent_value;
    DefiningSet s_min;
    std::vector<ShiftStep> steps;
    DefiningSet a_set;
    // Set when independent_value includes the binary weight-parity round-up;
    // requires the t_set eigenspace to be spanned by base-field vectors.
    bool parity_bump;
};

SpectralShiftResult spectral_shift(const QtCode& code, const SearchCaps& caps = {});

/** Consecutive-run bound over the eigenvalues: best run E inside omega_bar
 *  of min(|E| + 1, d(eigencode over E)).  Runs need not be closed. */
struct QtBchResult {
    std::uint64_t value;
    ConsecutiveSet run;
    Distance eigen_distance;
};

QtBchResult qt_bch_bound(const QtCode& code, StridePolicy policy = StridePolicy::unit);

/** Translate-pattern bound over the eigenvalues: best pattern D inside
 *  omega_bar of min(delta + s, d(eigencode over D)). */
struct QtHtResult {
    std::uint64_t value;
    std::uint32_t e, delta, n1, n2, s;
    Distance eigen_distance;
};

QtHtResult qt_ht_bound(const QtCode& code, const SearchCaps& caps = {});

} // namespace qtspec

#endif
