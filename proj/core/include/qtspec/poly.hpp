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

#ifndef QTSPEC_POLY_HPP
#define QTSPEC_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qtspec/field.hpp"
#include "qtspec/root_system.hpp"

namespace qtspec {

/**
 * Univariate polynomial over a Field, stored as an ascending coefficient
 * vector of element labels with no trailing zeros.  The zero polynomial has
 * an empty coefficient vector and degree() == -1.  Immutable value type; all
 * binary operations require both operands to share one Field instance.
 */
class Poly {
public:
    /** The zero polynomial. */
    explicit Poly(FieldPtr field);
    /** Trims trailing zeros; validates labels against the field. */
    Poly(FieldPtr field, std::vector<elem_t> coeffs);

    static Poly zero(const FieldPtr& field) { return Poly(field); }
    static Poly one(const FieldPtr& field);
    /** c * x^deg. */
    static Poly monomial(const FieldPtr& field, std::size_t deg, elem_t c = 1);

    const FieldPtr& field() const { return field_; }
    const std::vector<elem_t>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    /** -1 for the zero polynomial. */
    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(c_.size()) - 1; }
    /** Coefficient of x^i, zero beyond the degree. */
    elem_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    /** Throws on the zero polynomial. */
    elem_t leading() const;
    bool is_monic() const { return !c_.empty() && c_.back() == field_->one(); }

    bool operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    FieldPtr field_;
    std::vector<elem_t> c_;
};

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly mul(const Poly& a, const Poly& b);
Poly mul_scalar(const Poly& a, elem_t c);

/** Quotient and remainder with deg(rem) < deg(b).  Throws on b == 0. */
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly mod(const Poly& a, const Poly& b);
/** Exact quotient; throws std::domain_error if b does not divide a. */
Poly div_exact(const Poly& a, const Poly& b);
bool divides(const Poly& b, const Poly& a);

/** Monic gcd; gcd(0, 0) == 0. */
Poly gcd_monic(const Poly& a, const Poly& b);
/** Scales a nonzero polynomial to leading coefficient 1. */
Poly make_monic(const Poly& a);
Poly derivative(const Poly& a);

elem_t eval(const Poly& a, elem_t x);
/** Evaluates at a point of the extension field, embedding coefficients. */
elem_t eval_embedded(const Poly& a, const Embedding& emb, elem_t x);
/** Coefficient-wise image of a under emb, as a polynomial over emb.to(). */
Poly embed_poly(const Poly& a, const Embedding& emb);

/** Largest a with (x - beta)^a dividing f, for f over beta's own field.
 *  Throws on f == 0. */
std::size_t root_multiplicity(const Poly& f, elem_t beta);

/** The modulus x^m - lambda. */
Poly x_pow_m_minus_lambda(const FieldPtr& field, std::uint32_t m, elem_t lambda);

/** "c0,c1,..." ascending element labels; "0" for the zero polynomial. */
std::string format_poly(const Poly& a);
/** Inverse of format_poly; throws std::invalid_argument on bad syntax or
 *  out-of-range labels. */
Poly parse_poly(const FieldPtr& field, const std::string& text);

} // namespace qtspec

#endif
