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

#ifndef QTSPEC_QT_CODE_HPP
#define QTSPEC_QT_CODE_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "qtspec/poly_matrix.hpp"
#include "qtspec/root_system.hpp"

namespace qtspec {

/**
 * A length-(m * ell) word over GF(q), viewed interchangeably as an m x ell
 * array (entry (k, j) at flat position k * ell + j) or as a vector of ell
 * column polynomials c_j(x) = sum_k c[k][j] x^k of degree < m.
 */
class Codeword {
public:
    Codeword(FieldPtr field, std::uint32_t m, std::uint32_t ell, std::vector<elem_t> flat);
    static Codeword zero(const FieldPtr& field, std::uint32_t m, std::uint32_t ell);
    static Codeword from_polyvec(std::uint32_t m, const std::vector<Poly>& columns);

    const FieldPtr& field() const { return field_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t ell() const { return ell_; }
    std::size_t length() const { return flat_.size(); }

    elem_t at(std::uint32_t k, std::uint32_t j) const { return flat_[k * ell_ + j]; }
    const std::vector<elem_t>& flat() const { return flat_; }

    /** Column polynomials c_0(x), ..., c_{ell-1}(x). */
    std::vector<Poly> polyvec() const;

    std::size_t weight() const;
    bool is_zero() const { return weight() == 0; }
    bool operator==(const Codeword& o) const {
        return field_ == o.field_ && m_ == o.m_ && ell_ == o.ell_ && flat_ == o.flat_;
    }

private:
    FieldPtr field_;
    std::uint32_t m_, ell_;
    std::vector<elem_t> flat_;
};

/** Coefficient vector of length m to its polynomial, and back.  The inverse
 *  requires degree < m. */
Poly coeffs_to_poly(const FieldPtr& field, std::span<const elem_t> v);
std::vector<elem_t> poly_to_coeffs(const Poly& p, std::uint32_t m);

/** Rotates array rows downward by one, multiplying the wrapped row by
 *  lambda; equals componentwise multiplication by x modulo x^m - lambda. */
Codeword constashift(const Codeword& word, elem_t lambda);

/**
 * A quasi-twisted code: the GF(q)-subspace of GF(q)^{m ell} generated, as a
 * module over GF(q)[x] / (x^m - lambda), by the rows of a reduced upper
 * triangular ell x ell polynomial matrix.  Immutable; the root system of
 * x^m - lambda is built on first use and shared.
 */
class QtCode {
public:
    /** Reduces the generator vectors (any count, width ell) and validates.
     *  Throws std::invalid_argument on gcd(m, q) != 1, lambda not a unit, or
     *  shape mismatches. */
    static QtCode from_generators(const FieldPtr& field, elem_t lambda, std::uint32_t m,
                                  std::uint32_t ell,
                                  const std::vector<std::vector<Poly>>& generators);
    /** Accepts an already-reduced matrix; verifies it is exactly the
     *  canonical reduced basis of the module it generates. */
    static QtCode from_reduced(const FieldPtr& field, elem_t lambda, std::uint32_t m,
                               PolyMatrix reduced);

    const FieldPtr& field() const { return field_; }
    std::uint64_t q() const { return field_->q(); }
    elem_t lambda() const { return lambda_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t ell() const { return ell_; }
    std::size_t length() const { return static_cast<std::size_t>(m_) * ell_; }

    const PolyMatrix& generator_matrix() const { return gmat_; }

    /** m * ell minus the total diagonal degree. */
    std::size_t dimension() const { return dim_; }
    bool is_zero_code() const { return dim_ == 0; }
    bool is_full_code() const { return dim_ == length(); }

    /** Root system of x^m - lambda, built once on demand (thread-safe). */
    const RootSystemPtr& roots() const;

    bool contains(const Codeword& word) const;

    /** dimension() x (m * ell) matrix over GF(q) whose row space is the code:
     *  rows are x^i times generator row j for 0 <= i < m - deg(g_jj), columns
     *  in array layout. */
    Matrix scalar_generator_matrix() const;

    /** True iff the code is invariant under the constashift by ell' positions
     *  for no proper divisor ell' of ell, i.e. the declared index is the code's
     *  true shift index. */
    bool is_minimal_index() const;

private:
    QtCode(FieldPtr field, elem_t lambda, std::uint32_t m, std::uint32_t ell, PolyMatrix gmat);

    struct RootsHolder {
        std::once_flag once;
        RootSystemPtr ptr;
    };

    FieldPtr field_;
    elem_t lambda_;
    std::uint32_t m_, ell_;
    PolyMatrix gmat_;
    std::size_t dim_;
    std::shared_ptr<RootsHolder> roots_holder_;
};

} // namespace qtspec

#endif
