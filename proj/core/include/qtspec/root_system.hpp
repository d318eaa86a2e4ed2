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

#ifndef QTSPEC_ROOT_SYSTEM_HPP
#define QTSPEC_ROOT_SYSTEM_HPP

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "qtspec/field.hpp"

namespace qtspec {

/** Degree of the splitting field of x^m - lambda over GF(q): the least t >= 1
 *  with m * ord(lambda) dividing q^t - 1.  Requires gcd(m, q) = 1 and
 *  lambda != 0. */
std::uint32_t splitting_field_degree(const FieldPtr& base, std::uint32_t m, elem_t lambda);

/**
 * Field embedding GF(q) -> F for a subfield GF(q) of F.
 *
 * The residue class x of the base modulus is mapped to its first root in F in
 * label order, which determines the embedding on all of GF(q); for a prime
 * base field this is the canonical constant embedding.  Deterministic, so the
 * same pair of fields always produces the same map.
 */
class Embedding {
public:
    Embedding(FieldPtr from, FieldPtr to);

    const FieldPtr& from() const { return from_; }
    const FieldPtr& to() const { return to_; }
    bool is_identity() const { return identity_; }

    elem_t map(elem_t a) const;
    bool in_subfield(elem_t a) const;
    /** Preimage under map(); throws std::invalid_argument if a is not in the
     *  embedded subfield. */
    elem_t descend(elem_t a) const;

private:
    FieldPtr from_, to_;
    bool identity_;
    elem_t root_ = 0;                      // image of the base residue class
    std::vector<elem_t> image_;            // image_[a] for every base label
    std::unordered_map<elem_t, elem_t> back_;
};

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

/**
 * The m roots of x^m - lambda in its splitting field F over GF(q).
 *
 * Roots are indexed omega[k] = alpha * xi^k where xi = g^((|F|-1)/m) for the
 * field generator g, and alpha is the first power of g whose m-th power equals
 * the embedded lambda.  All choices are deterministic, so index sets are
 * stable across runs.
 */
class RootSystem {
public:
    /** Throws std::invalid_argument if gcd(m, q) != 1, lambda == 0, or the
     *  splitting field is too large to carry full tables. */
    static RootSystemPtr build(const FieldPtr& base, std::uint32_t m, elem_t lambda);

    const FieldPtr& base() const { return base_; }
    const FieldPtr& ext() const { return ext_; }
    const Embedding& embedding() const { return emb_; }
    std::uint32_t m() const { return m_; }
    elem_t lambda() const { return lambda_; }
    /** Degree of the splitting field over the base field. */
    std::uint32_t degree() const { return t_; }

    elem_t alpha() const { return alpha_; }
    elem_t xi() const { return xi_; }
    const std::vector<elem_t>& omega() const { return omega_; }
    elem_t omega(std::uint32_t k) const { return omega_.at(k); }

    /** Index of a root in omega; throws if beta is not a root of x^m - lambda. */
    std::uint32_t index_of(elem_t beta) const;
    bool is_root(elem_t beta) const { return index_.count(beta) != 0; }

    /** k |-> index of omega[k]^q, computed by powering in F (no index
     *  arithmetic is assumed). */
    const std::vector<std::uint32_t>& frobenius_map() const { return frob_; }

    /** Orbit of index k under repeated q-th powering, in traversal order. */
    std::vector<std::uint32_t> frobenius_orbit(std::uint32_t k) const;

    /** Closure of an index set under the Frobenius map (m <= 64). */
    std::uint64_t closure(std::uint64_t index_mask) const;
    bool is_closed(std::uint64_t index_mask) const;

    elem_t embed(elem_t a) const { return emb_.map(a); }
    elem_t descend(elem_t a) const { return emb_.descend(a); }

    /** Coordinates of v over the GF(q)-basis 1, x, x^2, ... of F built from
     *  the residue class x of the splitting-field modulus; length degree(). */
    std::vector<elem_t> coords_over_base(elem_t v) const;

private:
    RootSystem(FieldPtr base, std::uint32_t m, elem_t lambda);

    FieldPtr base_;
    std::uint32_t m_;
    elem_t lambda_;
    std::uint32_t t_;
    FieldPtr ext_;
    Embedding emb_;
    elem_t alpha_ = 0, xi_ = 0;
    std::vector<elem_t> omega_;
    std::unordered_map<elem_t, std::uint32_t> index_;
    std::vector<std::uint32_t> frob_;

    // GF(q)-coordinate solver: inverse of the GF(p)-matrix whose columns are
    // the coefficient vectors of emb(b_j) * x^k; identity for a prime base.
    std::vector<std::uint64_t> coord_matrix_; // row-major S x S over GF(p), empty if trivial
};

} // namespace qtspec

#endif
