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

#include "qtspec/qt_code.hpp"

#include <numeric>
#include <stdexcept>

namespace qtspec {

Codeword::Codeword(FieldPtr field, std::uint32_t m, std::uint32_t ell, std::vector<elem_t> flat)
    : field_(std::move(field)), m_(m), ell_(ell), flat_(std::move(flat)) {
    if (!field_) throw std::invalid_argument("codeword: null field");
    if (m_ == 0 || ell_ == 0) throw std::invalid_argument("codeword: empty shape");
    if (flat_.size() != static_cast<std::size_t>(m_) * ell_)
        throw std::invalid_argument("codeword: length mismatch");
    for (elem_t v : flat_) {
        if (v >= field_->q()) throw std::invalid_argument("codeword: label out of range");
    }
}

Codeword Codeword::zero(const FieldPtr& field, std::uint32_t m, std::uint32_t ell) {
    return Codeword(field, m, ell, std::vector<elem_t>(static_cast<std::size_t>(m) * ell, 0));
}

Codeword Codeword::from_polyvec(std::uint32_t m, const std::vector<Poly>& columns) {
    if (columns.empty()) throw std::invalid_argument("codeword: empty polynomial vector");
    const FieldPtr& field = columns.front().field();
    const std::uint32_t ell = static_cast<std::uint32_t>(columns.size());
    std::vector<elem_t> flat(static_cast<std::size_t>(m) * ell, 0);
    for (std::uint32_t j = 0; j < ell; ++j) {
        if (columns[j].field() != field) throw std::invalid_argument("codeword: field mismatch");
        if (columns[j].degree() >= static_cast<std::ptrdiff_t>(m))
            throw std::invalid_argument("codeword: column degree too large");
        for (std::uint32_t k = 0; k < m; ++k) flat[static_cast<std::size_t>(k) * ell + j] = columns[j].coeff(k);
    }
    return Codeword(field, m, ell, std::move(flat));
}

std::vector<Poly> Codeword::polyvec() const {
    std::vector<Poly> out;
    out.reserve(ell_);
    for (std::uint32_t j = 0; j < ell_; ++j) {
        std::vector<elem_t> c(m_);
        for (std::uint32_t k = 0; k < m_; ++k) c[k] = at(k, j);
        out.emplace_back(field_, std::move(c));
    }
    return out;
}

std::size_t Codeword::weight() const {
    std::size_t w = 0;
    for (elem_t v : flat_) w += v != 0;
    return w;
}

Poly coeffs_to_poly(const FieldPtr& field, std::span<const elem_t> v) {
    return Poly(field, std::vector<elem_t>(v.begin(), v.end()));
}

std::vector<elem_t> poly_to_coeffs(const Poly& p, std::uint32_t m) {
    if (p.degree() >= static_cast<std::ptrdiff_t>(m))
        throw std::invalid_argument("poly: degree too large for coefficient window");
    std::vector<elem_t> v(m, 0);
    for (std::uint32_t k = 0; k < m; ++k) v[k] = p.coeff(k);
    return v;
}

Codeword constashift(const Codeword& word, elem_t lambda) {
    const Field& f = *word.field();
    const std::uint32_t m = word.m(), ell = word.ell();
    std::vector<elem_t> flat(word.length(), 0);
    for (std::uint32_t j = 0; j < ell; ++j) {
        flat[j] = f.mul(lambda, word.at(m - 1, j));
        for (std::uint32_t k = 1; k < m; ++k) flat[static_cast<std::size_t>(k) * ell + j] = word.at(k - 1, j);
    }
    return Codeword(word.field(), m, ell, std::move(flat));
}

QtCode::QtCode(FieldPtr field, elem_t lambda, std::uint32_t m, std::uint32_t ell, PolyMatrix gmat)
    : field_(std::move(field)), lambda_(lambda), m_(m), ell_(ell), gmat_(std::move(gmat)),
      dim_(0), roots_holder_(std::make_shared<RootsHolder>()) {
    std::size_t total_deg = 0;
    for (std::uint32_t j = 0; j < ell_; ++j) total_deg += static_cast<std::size_t>(gmat_.at(j, j).degree());
    dim_ = length() - total_deg;
}

namespace {

void validate_params(const FieldPtr& field, elem_t lambda, std::uint32_t m, std::uint32_t ell) {
    if (!field) throw std::invalid_argument("qt code: null field");
    if (ell == 0) throw std::invalid_argument("qt code: ell must be positive");
    if (m == 0) throw std::invalid_argument("qt code: m must be positive");
    if (m % field->p() == 0) throw std::invalid_argument("qt code: m must be coprime to the field characteristic");
    if (lambda == 0 || lambda >= field->q()) throw std::invalid_argument("qt code: lambda must be a unit");
}

} // namespace

QtCode QtCode::from_generators(const FieldPtr& field, elem_t lambda, std::uint32_t m,
                               std::uint32_t ell,
                               const std::vector<std::vector<Poly>>& generators) {
    validate_params(field, lambda, m, ell);
    PolyMatrix reduced = reduce_generating_set(field, generators, m, lambda, ell);
    return QtCode(field, lambda, m, ell, std::move(reduced));
}

QtCode QtCode::from_reduced(const FieldPtr& field, elem_t lambda, std::uint32_t m,
                            PolyMatrix reduced) {
    const std::uint32_t ell = static_cast<std::uint32_t>(reduced.cols());
    validate_params(field, lambda, m, ell);
    if (reduced.rows() != ell) throw std::invalid_argument("qt code: generator matrix not square");
    if (reduced.field() != field) throw std::invalid_argument("qt code: generator matrix field mismatch");
    if (!is_reduced(reduced, m, lambda)) throw std::invalid_argument("qt code: matrix fails the reduced-form conditions");
    // The reduced basis of a module is unique, so re-reducing must reproduce
    // the input exactly; anything else is not a canonical basis.
    std::vector<std::vector<Poly>> rows;
    rows.reserve(ell);
    for (std::uint32_t r = 0; r < ell; ++r) {
        std::vector<Poly> row;
        row.reserve(ell);
        for (std::uint32_t c = 0; c < ell; ++c) row.push_back(reduced.at(r, c));
        rows.push_back(std::move(row));
    }
    PolyMatrix again = reduce_generating_set(field, rows, m, lambda, ell);
    if (!(again == reduced)) {
        throw std::invalid_argument("qt code: matrix is not the canonical reduced basis of its module");
    }
    return QtCode(field, lambda, m, ell, std::move(reduced));
}

const RootSystemPtr& QtCode::roots() const {
    std::call_once(roots_holder_->once, [this] {
        roots_holder_->ptr = RootSystem::build(field_, m_, lambda_);
    });
    return roots_holder_->ptr;
}

bool QtCode::contains(const Codeword& word) const {
    if (word.field() != field_) throw std::invalid_argument("qt code: codeword field mismatch");
    if (word.m() != m_ || word.ell() != ell_) throw std::invalid_argument("qt code: codeword shape mismatch");
    return contains_module_element(gmat_, word.polyvec(), m_, lambda_);
}

Matrix QtCode::scalar_generator_matrix() const {
    const Poly modulus = x_pow_m_minus_lambda(field_, m_, lambda_);
    Matrix out(field_, dim_, length());
    std::size_t r = 0;
    for (std::uint32_t j = 0; j < ell_; ++j) {
        const std::size_t shifts = m_ - static_cast<std::size_t>(gmat_.at(j, j).degree());
        for (std::size_t i = 0; i < shifts; ++i, ++r) {
            for (std::uint32_t c = j; c < ell_; ++c) {
                const Poly entry = mod(mul(Poly::monomial(field_, i), gmat_.at(j, c)), modulus);
                for (std::size_t k = 0; k < entry.coeffs().size(); ++k) {
                    out.set(r, k * ell_ + c, entry.coeffs()[k]);
                }
            }
        }
    }
    return out;
}

bool QtCode::is_minimal_index() const {
    if (ell_ == 1) return true;
    const Matrix gen = scalar_generator_matrix();
    const Matrix basis = gen.rref();
    const Field& f = *field_;
    const std::size_t n = length();
    for (std::uint64_t r : prime_factors(ell_)) {
        const std::size_t shift = ell_ / r;
        bool invariant = true;
        for (std::size_t row = 0; row < gen.rows() && invariant; ++row) {
            std::vector<elem_t> shifted(n, 0);
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t target = i + shift;
                if (target < n) {
                    shifted[target] = gen.at(row, i);
                } else {
                    shifted[target - n] = f.mul(lambda_, gen.at(row, i));
                }
            }
            invariant = basis.row_space_contains(shifted);
        }
        if (invariant) return false;
    }
    return true;
}

} // namespace qtspec
