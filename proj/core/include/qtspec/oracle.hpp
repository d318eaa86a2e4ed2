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

#ifndef QTSPEC_ORACLE_HPP
#define QTSPEC_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "qtspec/defining_set.hpp"
#include "qtspec/matrix.hpp"
#include "qtspec/poly.hpp"
#include "qtspec/qt_code.hpp"
#include "qtspec/root_system.hpp"

namespace qtspec {

struct OracleConfig {
    /** Enumeration budget: q^dimension must not exceed this. */
    std::uint64_t max_work = std::uint64_t{1} << 22;
};

/**
 * Exact minimum distance of the row space, by enumerating all q^k messages
 * in Gray order so each codeword is one row update away from the previous
 * one.  GF(2) and GF(3) words of length <= 64 run bit-sliced; everything
 * else takes a generic path.
 *
 * The generator matrix must have independent rows (so the zero codeword is
 * never revisited); a zero code (no rows) throws std::domain_error, and a
 * budget overrun throws std::runtime_error before any work is done.
 */
std::uint64_t min_distance(const Matrix& generator, const OracleConfig& cfg = {});

/** min_distance of the scalar generator matrix.  The full code short-circuits
 *  to 1; the zero code throws std::domain_error. */
std::uint64_t qt_min_distance(const QtCode& code, const OracleConfig& cfg = {});

/** Monic generator polynomial of the constacyclic code whose roots are
 *  exactly {omega[k] : k in the set}: the product of (x - omega[k]), which
 *  descends to the base field precisely when the set is Frobenius closed.
 *  Throws std::invalid_argument when it is not. */
Poly constacyclic_from_defining_set(const RootSystem& rs, const DefiningSet& defining);

/** (m - deg g) x m matrix whose rows are the coefficients of x^i * g.
 *  Requires 0 <= deg g <= m; the result has full row rank. */
Matrix constacyclic_generator_matrix(const Poly& g, std::uint32_t m);

/** One entry of the bundled reference table: a constacyclic defining set
 *  with its published consecutive-run bound, translate-pattern bound, and
 *  exact distance. */
struct TableRow {
    std::uint32_t no;
    std::uint64_t q;
    elem_t lambda;
    std::uint32_t m;
    std::uint32_t ell;
    std::uint32_t d_bch;
    std::uint32_t d_ht;
    std::uint32_t d_sp;
    std::vector<std::uint32_t> defining;
};

const std::vector<TableRow>& table1_rows();

struct TableCheck {
    std::uint32_t no;
    std::uint64_t bch;     // recomputed values
    std::uint64_t ht;
    std::uint64_t oracle;
    bool ok_bch;
    bool ok_ht;
    bool ok_distance;
    double seconds;

    bool ok() const { return ok_bch && ok_ht && ok_distance; }
};

struct TableReport {
    std::vector<TableCheck> rows;

    bool all_ok() const {
        for (const TableCheck& r : rows)
            if (!r.ok()) return false;
        return true;
    }
};

/** Recomputes every table row from its defining set alone and compares with
 *  the published values.  The distances come from full enumeration, so the
 *  default budget is raised accordingly. */
TableReport verify_table1(const OracleConfig& cfg = {std::uint64_t{1} << 30});

} // namespace qtspec

#endif
