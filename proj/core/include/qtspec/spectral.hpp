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

#ifndef QTSPEC_SPECTRAL_HPP
#define QTSPEC_SPECTRAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qtspec/matrix.hpp"
#include "qtspec/qt_code.hpp"

namespace qtspec {

/**
 * An exact minimum distance: a finite positive integer, or the infinity
 * assigned to the zero code {0}.  Infinity compares greater than every
 * finite value, so min() over mixed terms behaves as expected.
 */
class Distance {
public:
    static Distance finite(std::uint64_t v) { return Distance(true, v); }
    static Distance infinity() { return Distance(false, 0); }

    bool is_finite() const { return finite_; }
    /** Finite value; throws std::logic_error on infinity. */
    std::uint64_t value() const;

    friend std::strong_ordering operator<=>(const Distance& a, const Distance& b) {
        if (a.finite_ != b.finite_)
            return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
        return a.v_ <=> b.v_;
    }
    friend bool operator==(const Distance& a, const Distance& b) = default;

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Distance& d);

private:
    Distance(bool finite, std::uint64_t v) : finite_(finite), v_(v) {}
    bool finite_;
    std::uint64_t v_;
};

inline Distance min(const Distance& a, const Distance& b) { return a < b ? a : b; }

/** One eigenvalue of the reduced generator matrix G(x): a root beta of
 *  det G(x) among the roots of x^m - lambda, with the null space of G(beta)
 *  as the eigenspace.  The root multiplicity of det G always equals the
 *  eigenspace dimension. */
struct EigenvalueInfo {
    std::uint32_t index;      // position k of the root omega[k]
    elem_t beta;              // the root itself, in the splitting field
    std::uint32_t multiplicity;
    Matrix eigenspace;        // basis rows over the splitting field, ell columns
};

/** Every eigenvalue of a code, found by scanning all m roots of
 *  x^m - lambda. */
struct SpectralData {
    RootSystemPtr roots;
    std::vector<EigenvalueInfo> eigenvalues; // ascending index, multiplicity > 0 only
    std::vector<std::uint32_t> omega_bar;    // the indices above, ascending
    std::uint64_t omega_bar_mask;            // bit per index when m <= 64, else 0

    /** Entry for an index, or nullptr when it is not an eigenvalue. */
    const EigenvalueInfo* find(std::uint32_t index) const;
};

/** Scans det G(x) over all roots of x^m - lambda.  The code is the zero code
 *  iff every root is an eigenvalue of multiplicity ell, and the full code iff
 *  there are no eigenvalues.  Throws std::logic_error if an algebraic and a
 *  geometric multiplicity ever disagree; that would mean a generator matrix
 *  that is not actually reduced. */
SpectralData spectral_data(const QtCode& code);

/** Basis of the null space of G(omega[index]) over the splitting field; has
 *  zero rows when the root is not an eigenvalue.  Throws
 *  std::invalid_argument when index >= m. */
Matrix eigenspace(const QtCode& code, std::uint32_t index);

/** Basis of the intersection of the eigenspaces at the given indices.
 *  The index set must be nonempty and consist of eigenvalues of the code;
 *  anything else throws std::invalid_argument. */
Matrix common_eigenspace(const QtCode& code, std::span<const std::uint32_t> indices);

/** The code cut out of GF(q)^ell by an eigenspace: all vectors annihilated
 *  by every basis row.  Its distance is exact; {0} has infinite distance and
 *  an empty eigenbasis leaves the full space, of distance 1. */
struct Eigencode {
    Matrix basis;      // rows over GF(q), ell columns
    Distance distance;
};

/** eigenbasis must be a matrix over the splitting field with ell columns;
 *  rows need not come from an actual eigenspace.  The member equations are
 *  rewritten over GF(q) by coordinates, one block of degree() equations per
 *  basis row.  Distance is found by enumerating the eigencode, so ell is
 *  capped (q^dim <= 2^22). */
Eigencode eigencode(const QtCode& code, const Matrix& eigenbasis);

/** Parity check matrix over the splitting field: one row per eigenspace
 *  basis vector v of each eigenvalue beta, with entries beta^k * v_j at
 *  array position (k, j).  Its rank is m*ell - dimension, and it annihilates
 *  exactly the embedded codewords.  The full code gets a 0 x (m*ell)
 *  matrix. */
Matrix parity_check(const QtCode& code);

} // namespace qtspec

#endif
