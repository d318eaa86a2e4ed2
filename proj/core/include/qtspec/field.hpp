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

#ifndef QTSPEC_FIELD_HPP
#define QTSPEC_FIELD_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace qtspec {

/** Label of a field element: the packed coefficient vector
 *  c_0 + c_1 p + c_2 p^2 + ... of its representation over GF(p). */
using elem_t = std::uint64_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/**
 * GF(p^s), constructed deterministically.
 *
 * The modulus is the lexicographically first monic irreducible polynomial of
 * degree s over GF(p) (candidates ordered by the packed value of their
 * non-leading coefficients), and the generator is the smallest label whose
 * multiplicative order is p^s - 1.  Two calls to make() with the same (p, s)
 * return the same shared instance, so element labels are interchangeable.
 *
 * Elements are dense coefficient vectors over GF(p), packed into labels.
 * For p^s <= 2^16 the instance carries log/exp tables; beyond that all
 * operations fall back to direct coefficient arithmetic.  Instances are
 * immutable after construction and safe to share across threads.
 */
class Field : public std::enable_shared_from_this<Field> {
public:
    /** Shared instance for GF(p^s).  Throws std::invalid_argument if p is not
     *  prime, s == 0, or p^s exceeds 2^40. */
    static FieldPtr make(std::uint64_t p, std::uint32_t s);

    std::uint64_t p() const { return p_; }
    std::uint32_t s() const { return s_; }
    std::uint64_t q() const { return q_; }
    bool has_tables() const { return tables_; }

    /** Modulus coefficients, ascending, length s+1, monic. */
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }
    elem_t generator() const { return generator_; }

    elem_t zero() const { return 0; }
    elem_t one() const { return 1; }

    elem_t add(elem_t a, elem_t b) const;
    elem_t sub(elem_t a, elem_t b) const;
    elem_t neg(elem_t a) const;
    elem_t mul(elem_t a, elem_t b) const;
    /** Throws std::invalid_argument on a == 0. */
    elem_t inv(elem_t a) const;
    elem_t div(elem_t a, elem_t b) const { return mul(a, inv(b)); }
    /** a^e with pow(0,0) == 1. */
    elem_t pow(elem_t a, std::uint64_t e) const;

    /** Multiplicative order; throws on a == 0. */
    std::uint64_t element_order(elem_t a) const;

    /** Discrete log base generator(); requires tables.  Throws on a == 0. */
    std::uint64_t log(elem_t a) const;

    /** Embeds an integer into the prime subfield (value mod p). */
    elem_t from_int(std::int64_t v) const;

    /** Coefficient vector over GF(p), ascending, length s. */
    std::vector<std::uint64_t> coeffs(elem_t a) const;
    /** Packs an ascending coefficient vector (length <= s, entries < p). */
    elem_t from_coeffs(std::span<const std::uint64_t> c) const;

    /** "c0,c1,..." ascending over GF(p), e.g. "1,0,2" for 1 + 2x^2 in GF(27). */
    std::string format_element(elem_t a) const;
    elem_t parse_element(const std::string& text) const;

    /** Prime factors of q - 1 (each once, ascending). */
    const std::vector<std::uint64_t>& unit_group_factors() const { return unit_factors_; }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    Field(std::uint64_t p, std::uint32_t s);

    void build_tables();
    elem_t mul_generic(elem_t a, elem_t b) const;
    elem_t pow_generic(elem_t a, std::uint64_t e) const;

    std::uint64_t p_;
    std::uint32_t s_;
    std::uint64_t q_;
    std::vector<std::uint64_t> modulus_;
    elem_t generator_ = 0;
    std::vector<std::uint64_t> unit_factors_;

    bool tables_ = false;
    std::vector<elem_t> exp_;          // exp_[i] = generator^i, i < q-1
    std::vector<std::uint32_t> log_;   // log_[a] for a != 0
    std::vector<std::uint8_t> digits_; // s base-p digits per label, extension fields only
};

FieldPtr make_field(std::uint64_t p, std::uint32_t s);

bool is_prime(std::uint64_t n);

/** Distinct prime factors, ascending. */
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

} // namespace qtspec

#endif
