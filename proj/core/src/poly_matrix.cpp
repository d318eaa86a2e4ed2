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

#include "qtspec/poly_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtspec {

PolyMatrix::PolyMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
    if (!field_) throw std::invalid_argument("poly matrix: null field");
    e_.assign(rows_ * cols_, Poly(field_));
}

PolyMatrix PolyMatrix::identity(const FieldPtr& field, std::size_t n) {
    PolyMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Poly::one(field));
    return m;
}

void PolyMatrix::set(std::size_t r, std::size_t c, Poly p) {
    if (p.field() != field_) throw std::invalid_argument("poly matrix: entry field mismatch");
    e_[r * cols_ + c] = std::move(p);
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool PolyMatrix::is_upper_triangular() const {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < std::min(r, cols_); ++c) {
            if (!at(r, c).is_zero()) return false;
        }
    return true;
}

Matrix PolyMatrix::eval(elem_t x) const {
    Matrix out(field_, rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.set(r, c, qtspec::eval(at(r, c), x));
    return out;
}

Matrix PolyMatrix::eval_embedded(const Embedding& emb, elem_t x) const {
    Matrix out(emb.to(), rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.set(r, c, qtspec::eval_embedded(at(r, c), emb, x));
    return out;
}

Poly determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
    if (m.is_upper_triangular()) {
        Poly det = Poly::one(m.field());
        for (std::size_t j = 0; j < m.rows(); ++j) det = mul(det, m.at(j, j));
        return det;
    }
    return determinant_elimination(m);
}

Poly determinant_elimination(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
    const std::size_t n = m.rows();
    const FieldPtr& f = m.field();
    if (n == 0) return Poly::one(f);

    // Bareiss fraction-free elimination: every division is exact in F[x].
    std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n, Poly(f)));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a[r][c] = m.at(r, c);

    bool negate = false;
    Poly prev = Poly::one(f);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Poly(f);
            std::swap(a[k], a[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = sub(mul(a[i][j], a[k][k]), mul(a[i][k], a[k][j]));
                a[i][j] = div_exact(num, prev);
            }
            a[i][k] = Poly(f);
        }
        prev = a[k][k];
    }
    Poly det = a[n - 1][n - 1];
    return negate ? neg(det) : det;
}

PolyMatrix reduce_generating_set(const FieldPtr& field,
                                 const std::vector<std::vector<Poly>>& generators,
                                 std::uint32_t m, elem_t lambda, std::size_t ell) {
    if (ell == 0) throw std::invalid_argument("reduce: ell must be positive");
    if (m == 0) throw std::invalid_argument("reduce: m must be positive");
    if (lambda == 0 || lambda >= field->q()) throw std::invalid_argument("reduce: lambda must be a unit");
    const Poly modulus = x_pow_m_minus_lambda(field, m, lambda);

    std::vector<std::vector<Poly>> rows;
    rows.reserve(generators.size() + ell);
    for (const auto& g : generators) {
        if (g.size() != ell) throw std::invalid_argument("reduce: generator width mismatch");
        std::vector<Poly> r;
        r.reserve(ell);
        for (const Poly& p : g) {
            if (p.field() != field) throw std::invalid_argument("reduce: generator field mismatch");
            r.push_back(mod(p, modulus));
        }
        rows.push_back(std::move(r));
    }
    for (std::size_t j = 0; j < ell; ++j) {
        std::vector<Poly> r(ell, Poly(field));
        r[j] = modulus;
        rows.push_back(std::move(r));
    }

    // Triangularize by Euclidean elimination within each column: repeatedly
    // reduce the other nonzero entries by the minimum-degree one until a
    // single pivot remains, then move it into place.
    for (std::size_t col = 0; col < ell; ++col) {
        while (true) {
            std::size_t min_row = rows.size();
            for (std::size_t r = col; r < rows.size(); ++r) {
                if (rows[r][col].is_zero()) continue;
                if (min_row == rows.size() ||
                    rows[r][col].degree() < rows[min_row][col].degree()) {
                    min_row = r;
                }
            }
            if (min_row == rows.size()) {
                throw std::logic_error("reduce: empty pivot column");
            }
            bool eliminated_any = false;
            for (std::size_t r = col; r < rows.size(); ++r) {
                if (r == min_row || rows[r][col].is_zero()) continue;
                Poly q = divmod(rows[r][col], rows[min_row][col]).first;
                for (std::size_t c = col; c < ell; ++c) {
                    rows[r][c] = sub(rows[r][c], mul(q, rows[min_row][c]));
                }
                eliminated_any = true;
            }
            if (!eliminated_any) {
                std::swap(rows[col], rows[min_row]);
                break;
            }
        }
    }

    PolyMatrix out(field, ell, ell);
    for (std::size_t r = 0; r < ell; ++r) {
        const elem_t inv = field->inv(rows[r][r].leading());
        for (std::size_t c = r; c < ell; ++c) out.set(r, c, mul_scalar(rows[r][c], inv));
    }

    // Rows past the square block must now be redundant.
    for (std::size_t r = ell; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < ell; ++c) {
            if (!rows[r][c].is_zero()) throw std::logic_error("reduce: leftover row after triangularization");
        }
    }

    // Reduce above-diagonal entries modulo the diagonal of their column.
    for (std::size_t col = 1; col < ell; ++col) {
        for (std::size_t r = 0; r < col; ++r) {
            Poly q = divmod(out.at(r, col), out.at(col, col)).first;
            if (q.is_zero()) continue;
            for (std::size_t c = col; c < ell; ++c) {
                out.set(r, c, sub(out.at(r, c), mul(q, out.at(col, c))));
            }
        }
    }
    return out;
}

bool is_reduced(const PolyMatrix& g, std::uint32_t m, elem_t lambda) {
    if (g.rows() != g.cols()) return false;
    const std::size_t ell = g.rows();
    const Poly modulus = x_pow_m_minus_lambda(g.field(), m, lambda);
    for (std::size_t r = 0; r < ell; ++r) {
        for (std::size_t c = 0; c < r; ++c) {
            if (!g.at(r, c).is_zero()) return false;
        }
        const Poly& diag = g.at(r, r);
        if (diag.is_zero() || !diag.is_monic()) return false;
        if (!divides(diag, modulus)) return false;
    }
    for (std::size_t c = 0; c < ell; ++c) {
        for (std::size_t r = 0; r < c; ++r) {
            if (g.at(r, c).degree() >= g.at(c, c).degree()) return false;
        }
    }
    for (std::size_t r = 0; r < ell; ++r) {
        if (g.at(r, r) == modulus) {
            for (std::size_t c = r + 1; c < ell; ++c) {
                if (!g.at(r, c).is_zero()) return false;
            }
        }
    }
    return true;
}

bool contains_module_element(const PolyMatrix& reduced, std::vector<Poly> word,
                             std::uint32_t m, elem_t lambda) {
    const std::size_t ell = reduced.cols();
    if (reduced.rows() != ell) throw std::invalid_argument("membership: matrix not square");
    if (word.size() != ell) throw std::invalid_argument("membership: word width mismatch");
    const Poly modulus = x_pow_m_minus_lambda(reduced.field(), m, lambda);
    for (Poly& p : word) {
        if (p.field() != reduced.field()) throw std::invalid_argument("membership: field mismatch");
        p = mod(p, modulus);
    }
    for (std::size_t j = 0; j < ell; ++j) {
        if (word[j].is_zero()) continue;
        auto [q, r] = divmod(word[j], reduced.at(j, j));
        if (!r.is_zero()) return false;
        for (std::size_t c = j; c < ell; ++c) {
            word[c] = mod(sub(word[c], mul(q, reduced.at(j, c))), modulus);
        }
    }
    return true;
}

} // namespace qtspec
