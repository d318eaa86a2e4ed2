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

#ifndef QTSPEC_POLY_MATRIX_HPP
#define QTSPEC_POLY_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "qtspec/matrix.hpp"
#include "qtspec/poly.hpp"

namespace qtspec {

/** Rectangular grid of polynomials over one field. */
class PolyMatrix {
public:
    PolyMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
    static PolyMatrix identity(const FieldPtr& field, std::size_t n);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Poly& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Poly p);

    bool operator==(const PolyMatrix& o) const;

    bool is_upper_triangular() const;

    /** Entry-wise evaluation at a point of the coefficient field. */
    Matrix eval(elem_t x) const;
    /** Entry-wise evaluation at a point of the extension field. */
    Matrix eval_embedded(const Embedding& emb, elem_t x) const;

private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<Poly> e_;
};

/** Product of the diagonal for triangular input, otherwise fraction-free
 *  elimination.  Square input only. */
Poly determinant(const PolyMatrix& m);
/** Always runs the fraction-free (Bareiss) elimination path. */
Poly determinant_elimination(const PolyMatrix& m);

/**
 * Canonical reduced basis of the module spanned by the given length-ell
 * generator vectors together with the rows (x^m - lambda) e_j.
 *
 * The result is the unique ell x ell matrix whose rows generate that module
 * with: zeros below the diagonal, monic diagonal entries dividing x^m -
 * lambda, and above-diagonal entries of degree less than the diagonal entry
 * of their column.  An empty generator list yields (x^m - lambda) I.
 */
PolyMatrix reduce_generating_set(const FieldPtr& field,
                                 const std::vector<std::vector<Poly>>& generators,
                                 std::uint32_t m, elem_t lambda, std::size_t ell);

/**
 * Structural check of the reduced form: upper triangular, monic diagonal
 * dividing x^m - lambda, above-diagonal degrees bounded by the column's
 * diagonal degree, and any row whose diagonal entry equals x^m - lambda is
 * exactly (x^m - lambda) e_j.
 */
bool is_reduced(const PolyMatrix& g, std::uint32_t m, elem_t lambda);

/** Membership of a length-ell vector (entries of degree < m) in the module
 *  generated by the rows of a reduced matrix together with (x^m - lambda) e_j. */
bool contains_module_element(const PolyMatrix& reduced, std::vector<Poly> word,
                             std::uint32_t m, elem_t lambda);

} // namespace qtspec

#endif
