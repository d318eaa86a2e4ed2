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

#include "qtspec/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace qtspec {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    if (!field_) throw std::invalid_argument("matrix: null field");
}

Matrix Matrix::identity(const FieldPtr& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, field->one());
    return m;
}

Matrix Matrix::from_rows(const FieldPtr& field,
                         const std::vector<std::vector<elem_t>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("matrix: ragged rows");
        for (std::size_t j = 0; j < c; ++j) {
            if (rows[i][j] >= field->q()) throw std::invalid_argument("matrix: label out of range");
            m.set(i, j, rows[i][j]);
        }
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

Matrix Matrix::mul(const Matrix& o) const {
    if (field_ != o.field_) throw std::invalid_argument("matrix: field mismatch");
    if (cols_ != o.rows_) throw std::invalid_argument("matrix: shape mismatch");
    const Field& f = *field_;
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const elem_t v = at(r, k);
            if (v == 0) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) {
                out.set(r, c, f.add(out.at(r, c), f.mul(v, o.at(k, c))));
            }
        }
    }
    return out;
}

std::vector<elem_t> Matrix::mul_vec(std::span<const elem_t> v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix: vector length mismatch");
    const Field& f = *field_;
    std::vector<elem_t> out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        elem_t acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) acc = f.add(acc, f.mul(at(r, c), v[c]));
        out[r] = acc;
    }
    return out;
}

Matrix Matrix::stacked(const Matrix& below) const {
    if (field_ != below.field_ || cols_ != below.cols_)
        throw std::invalid_argument("matrix: stack mismatch");
    Matrix out(field_, rows_ + below.rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.set(r, c, at(r, c));
    for (std::size_t r = 0; r < below.rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.set(rows_ + r, c, below.at(r, c));
    return out;
}

Matrix Matrix::rref() const {
    const Field& f = *field_;
    Matrix m(*this);
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows_ && m.at(sel, col) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != pivot_row) {
            for (std::size_t c = 0; c < cols_; ++c) {
                const elem_t tmp = m.at(sel, c);
                m.set(sel, c, m.at(pivot_row, c));
                m.set(pivot_row, c, tmp);
            }
        }
        const elem_t inv = f.inv(m.at(pivot_row, col));
        for (std::size_t c = col; c < cols_; ++c) m.set(pivot_row, c, f.mul(m.at(pivot_row, c), inv));
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pivot_row) continue;
            const elem_t factor = m.at(r, col);
            if (factor == 0) continue;
            for (std::size_t c = col; c < cols_; ++c) {
                m.set(r, c, f.sub(m.at(r, c), f.mul(factor, m.at(pivot_row, c))));
            }
        }
        ++pivot_row;
    }
    return m;
}

std::size_t Matrix::rank() const {
    Matrix r = rref();
    std::size_t n = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
        bool nonzero = false;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (r.at(i, c) != 0) { nonzero = true; break; }
        }
        if (nonzero) ++n;
    }
    return n;
}

Matrix Matrix::null_space() const {
    const Field& f = *field_;
    Matrix r = rref();
    std::vector<std::ptrdiff_t> pivot_of_col(cols_, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        if (r.at(row, col) != 0) {
            pivot_of_col[col] = static_cast<std::ptrdiff_t>(row);
            ++row;
        }
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t col = 0; col < cols_; ++col) {
        if (pivot_of_col[col] < 0) free_cols.push_back(col);
    }
    Matrix basis(field_, free_cols.size(), cols_);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        const std::size_t fc = free_cols[i];
        basis.set(i, fc, f.one());
        for (std::size_t col = 0; col < cols_; ++col) {
            if (pivot_of_col[col] >= 0) {
                const std::size_t pr = static_cast<std::size_t>(pivot_of_col[col]);
                basis.set(i, col, f.neg(r.at(pr, fc)));
            }
        }
    }
    return basis;
}

bool Matrix::row_space_contains(std::span<const elem_t> v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix: vector length mismatch");
    const Field& f = *field_;
    Matrix r = rref();
    std::vector<elem_t> w(v.begin(), v.end());
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        if (r.at(row, col) == 0) continue;
        if (w[col] != 0) {
            const elem_t factor = w[col];
            for (std::size_t c = col; c < cols_; ++c) w[c] = f.sub(w[c], f.mul(factor, r.at(row, c)));
        }
        ++row;
    }
    for (elem_t x : w) {
        if (x != 0) return false;
    }
    return true;
}

bool Matrix::is_zero() const {
    for (elem_t x : a_) {
        if (x != 0) return false;
    }
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            if (at(r, c) != (r == c ? field_->one() : 0)) return false;
        }
    return true;
}

Matrix Matrix::mapped(const Embedding& emb) const {
    if (emb.from() != field_) throw std::invalid_argument("matrix: embedding field mismatch");
    Matrix out(emb.to(), rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.set(r, c, emb.map(at(r, c)));
    return out;
}

std::string Matrix::to_string() const {
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) out << ' ';
            out << field_->format_element(at(r, c));
        }
        out << '\n';
    }
    return out.str();
}

} // namespace qtspec
