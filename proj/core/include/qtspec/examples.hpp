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

#ifndef QTSPEC_EXAMPLES_HPP
#define QTSPEC_EXAMPLES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qtspec/bounds.hpp"
#include "qtspec/oracle.hpp"
#include "qtspec/qt_code.hpp"
#include "qtspec/spectral.hpp"

namespace qtspec {

/** One verified quantity: a named value the run must reproduce exactly.
 *  Values are serialized so that finite and infinite distances compare the
 *  same way. */
struct ExampleCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

/** Everything computed for one worked module, witnesses included. */
struct ExampleReport {
    std::string name;
    std::uint64_t q = 0;
    std::uint32_t m = 0;
    std::uint32_t ell = 0;
    std::uint64_t dimension = 0;
    DefiningSet omega_bar;
    ShiftResult shift;
    RoosResult roos;
    BchResult bch;
    std::uint64_t oracle_distance = 0;
    Distance eigen_distance = Distance::infinity();
    std::uint64_t spectral_value = 0;
    std::vector<ExampleCheck> checks;
    bool pass = false;
};

struct ExamplesReport {
    std::vector<ExampleReport> examples;
    bool pass = false;
};

/**
 * Runs the two worked modules end to end and checks every expected number.
 *
 * The first is the binary index-4 module over m = 23 whose blocks share the
 * perfect [23, 12, 7] cyclic code: the eigenvalue set is the Frobenius orbit
 * of 1, the common eigenspace is the identity (so the eigencode distance is
 * infinite), the independent-set bound reaches 7, the two-set and
 * consecutive-run bounds give 5, and the enumerated block distance is 7.
 *
 * The second is the ternary index-4 module over m = 26: the two-set bound
 * reaches 6 with a window certificate |M'| = 5 <= |M| + d_N - 2, the
 * independent-set bound stops at 5, and the enumerated block distance is 6.
 *
 * The oracle budget must cover the ternary block enumeration (3^18 words).
 */
ExamplesReport run_examples(const OracleConfig& cfg = {std::uint64_t{1} << 30});

} // namespace qtspec

#endif // QTSPEC_EXAMPLES_HPP
