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

#include "qtspec/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace qtspec {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
    if (a.field() != b.field()) {
        throw std::invalid_argument("poly: operands from different fields");
    }
}

void trim(std::vector<elem_t>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

} // namespace

Poly::Poly(FieldPtr field) : field_(std::move(field)) {
    if (!field_) throw std::invalid_argument("poly: null field");
}

Poly::Poly(FieldPtr field, std::vector<elem_t> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    if (!field_) throw std::invalid_argument("poly: null field");
    for (elem_t c : c_) {
        if (c >= field_->q()) throw std::invalid_argument("poly: coefficient label out of range");
    }
    trim(c_);
}

Poly Poly::one(const FieldPtr& field) {
    return Poly(field, {field->one()});
}

Poly Poly::monomial(const FieldPtr& field, std::size_t deg, elem_t c) {
    std::vector<elem_t> v(deg + 1, 0);
    v[deg] = c;
    return Poly(field, std::move(v));
}

elem_t Poly::leading() const {
    if (c_.empty()) throw std::domain_error("poly: zero polynomial has no leading coefficient");
    return c_.back();
}

Poly add(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const Field& f = *a.field();
    std::vector<elem_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
    return Poly(a.field(), std::move(c));
}

Poly sub(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const Field& f = *a.field();
    std::vector<elem_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
    return Poly(a.field(), std::move(c));
}

Poly neg(const Poly& a) {
    const Field& f = *a.field();
    std::vector<elem_t> c(a.coeffs());
    for (elem_t& x : c) x = f.neg(x);
    return Poly(a.field(), std::move(c));
}

Poly mul(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.field());
    const Field& f = *a.field();
    std::vector<elem_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const elem_t ai = a.coeffs()[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            c[i + j] = f.add(c[i + j], f.mul(ai, b.coeffs()[j]));
        }
    }
    return Poly(a.field(), std::move(c));
}

Poly mul_scalar(const Poly& a, elem_t s) {
    const Field& f = *a.field();
    std::vector<elem_t> c(a.coeffs());
    for (elem_t& x : c) x = f.mul(x, s);
    return Poly(a.field(), std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw std::domain_error("poly: division by zero polynomial");
    const Field& f = *a.field();
    if (a.degree() < b.degree()) return {Poly(a.field()), a};
    const elem_t lead_inv = f.inv(b.leading());
    std::vector<elem_t> rem(a.coeffs());
    std::vector<elem_t> quot(a.coeffs().size() - b.coeffs().size() + 1, 0);
    for (std::size_t i = quot.size(); i-- > 0;) {
        const elem_t top = rem[i + b.coeffs().size() - 1];
        if (top == 0) continue;
        const elem_t qc = f.mul(top, lead_inv);
        quot[i] = qc;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            rem[i + j] = f.sub(rem[i + j], f.mul(qc, b.coeffs()[j]));
        }
    }
    return {Poly(a.field(), std::move(quot)), Poly(a.field(), std::move(rem))};
}

Poly mod(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("poly: inexact division");
    return q;
}

bool divides(const Poly& b, const Poly& a) {
    if (b.is_zero()) return a.is_zero();
    return mod(a, b).is_zero();
}

Poly gcd_monic(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = mod(x, y);
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return make_monic(x);
}

Poly make_monic(const Poly& a) {
    if (a.is_zero()) throw std::domain_error("poly: cannot normalize zero polynomial");
    if (a.is_monic()) return a;
    return mul_scalar(a, a.field()->inv(a.leading()));
}

Poly derivative(const Poly& a) {
    if (a.degree() <= 0) return Poly(a.field());
    const Field& f = *a.field();
    std::vector<elem_t> c(a.coeffs().size() - 1, 0);
    for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
        elem_t factor = f.from_int(static_cast<std::int64_t>(i % f.p()));
        c[i - 1] = f.mul(a.coeffs()[i], factor);
    }
    return Poly(a.field(), std::move(c));
}

elem_t eval(const Poly& a, elem_t x) {
    const Field& f = *a.field();
    elem_t acc = 0;
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        acc = f.add(f.mul(acc, x), a.coeffs()[i]);
    }
    return acc;
}

elem_t eval_embedded(const Poly& a, const Embedding& emb, elem_t x) {
    if (emb.from() != a.field()) throw std::invalid_argument("poly: embedding does not match coefficient field");
    const Field& f = *emb.to();
    elem_t acc = 0;
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        acc = f.add(f.mul(acc, x), emb.map(a.coeffs()[i]));
    }
    return acc;
}

Poly embed_poly(const Poly& a, const Embedding& emb) {
    if (emb.from() != a.field()) throw std::invalid_argument("poly: embedding does not match coefficient field");
    std::vector<elem_t> c(a.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = emb.map(a.coeffs()[i]);
    return Poly(emb.to(), std::move(c));
}

std::size_t root_multiplicity(const Poly& f, elem_t beta) {
    if (f.is_zero()) throw std::domain_error("poly: root multiplicity of zero polynomial");
    const Field& fld = *f.field();
    std::size_t count = 0;
    std::vector<elem_t> c(f.coeffs());
    while (!c.empty()) {
        // Synthetic division by (x - beta); the final accumulator is the
        // remainder and the intermediate values are the quotient.
        std::vector<elem_t> q(c.size() - 1, 0);
        elem_t acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            const elem_t next = fld.add(fld.mul(acc, beta), c[i]);
            if (i > 0) q[i - 1] = next;
            acc = next;
        }
        if (acc != 0) break;
        ++count;
        c = std::move(q);
    }
    return count;
}

Poly x_pow_m_minus_lambda(const FieldPtr& field, std::uint32_t m, elem_t lambda) {
    if (m == 0) throw std::invalid_argument("poly: exponent must be positive");
    std::vector<elem_t> c(m + 1, 0);
    c[0] = field->neg(lambda);
    c[m] = field->one();
    return Poly(field, std::move(c));
}

std::string format_poly(const Poly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (i) out << ',';
        out << a.coeffs()[i];
    }
    return out.str();
}

Poly parse_poly(const FieldPtr& field, const std::string& text) {
    std::vector<elem_t> c;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(token, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("poly: bad coefficient '" + token + "'");
        }
        if (pos != token.size()) throw std::invalid_argument("poly: bad coefficient '" + token + "'");
        if (v >= field->q()) throw std::invalid_argument("poly: coefficient label out of range");
        c.push_back(v);
    }
    if (c.empty()) throw std::invalid_argument("poly: empty coefficient list");
    return Poly(field, std::move(c));
}

} // namespace qtspec
