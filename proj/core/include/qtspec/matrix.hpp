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

#ifndef QTSPEC_MATRIX_HPP
#define QTSPEC_MATRIX_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qtspec/field.hpp"
#include "qtspec/root_system.hpp"

namespace qtspec {

/**
 * Dense matrix of field-element labels.  Works over any Field instance,
 * base or splitting field alike.  Row-major storage; a 0-row matrix is a
 * valid value (the empty constraint set or empty basis).
 */
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    static Matrix identity(const FieldPtr& field, std::size_t n);
    static Matrix from_rows(const FieldPtr& field,
                            const std::vector<std::vector<elem_t>>& rows);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    elem_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, elem_t v) { a_[r * cols_ + c] = v; }
    std::span<const elem_t> row(std::size_t r) const {
        return {a_.data() + r * cols_, cols_};
    }

    bool operator==(const Matrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Matrix transpose() const;
    Matrix mul(const Matrix& o) const;
    /** M v^T for a length-cols vector. */
    std::vector<elem_t> mul_vec(std::span<const elem_t> v) const;
    /** Rows of this matrix followed by the rows of below. */
    Matrix stacked(const Matrix& below) const;

    /** Reduced row echelon form: pivots scanned left to right, normalized to
     *  1, eliminated above and below; zero rows trail.  Deterministic. */
    Matrix rref() const;
    std::size_t rank() const;
    /** Basis of {v : M v^T = 0} as rows, one per free column in ascending
     *  column order, each with a 1 in its free column.  Deterministic. */
    Matrix null_space() const;

    /** True iff v lies in the row space. */
    bool row_space_contains(std::span<const elem_t> v) const;

    bool is_zero() const;
    bool is_identity() const;

    /** Entry-wise image under a field embedding. */
    Matrix mapped(const Embedding& emb) const;

    std::string to_string() const;

private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<elem_t> a_;
};

} // namespace qtspec

#endif
