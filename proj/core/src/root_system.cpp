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

#include "qtspec/root_system.hpp"

#include <numeric>
#include <stdexcept>

namespace qtspec {

std::uint32_t splitting_field_degree(const FieldPtr& base, std::uint32_t m, elem_t lambda) {
    if (m == 0) throw std::invalid_argument("m must be positive");
    if (lambda == 0 || lambda >= base->q())
        throw std::invalid_argument("lambda must be a nonzero field element");
    if (std::gcd(static_cast<std::uint64_t>(m), base->p()) != 1)
        throw std::invalid_argument("m must be coprime to the field characteristic");

    std::uint64_t target = static_cast<std::uint64_t>(m) * base->element_order(lambda);
    std::uint64_t qe = 1;
    for (std::uint32_t t = 1;; ++t) {
        qe = static_cast<std::uint64_t>(static_cast<unsigned __int128>(qe) * (base->q() % target) % target);
        if (qe == 1 % target) return t;
        if (t > target) throw std::logic_error("splitting field degree search failed");
    }
}

Embedding::Embedding(FieldPtr from, FieldPtr to) : from_(std::move(from)), to_(std::move(to)) {
    identity_ = (from_ == to_);
    if (identity_) return;
    if (from_->p() != to_->p() || to_->s() % from_->s() != 0)
        throw std::invalid_argument("no embedding between these fields");

    if (from_->s() == 1) {
        // prime subfield: constants embed as themselves
        root_ = 1;
        return;
    }
    if (!to_->has_tables())
        throw std::invalid_argument("embedding requires a table-backed extension field");

    // first root of the base modulus in label order
    const auto& f = from_->modulus();
    elem_t found = 0;
    bool ok = false;
    for (elem_t cand = 0; cand < to_->q(); ++cand) {
        elem_t acc = 0;
        for (std::size_t i = f.size(); i-- > 0;)
            acc = to_->add(to_->mul(acc, cand), to_->from_int(static_cast<std::int64_t>(f[i])));
        if (acc == 0) {
            found = cand;
            ok = true;
            break;
        }
    }
    if (!ok) throw std::logic_error("base modulus has no root in extension");
    root_ = found;

    image_.resize(from_->q());
    for (elem_t a = 0; a < from_->q(); ++a) {
        auto c = from_->coeffs(a);
        elem_t acc = 0;
        for (std::size_t i = c.size(); i-- > 0;)
            acc = to_->add(to_->mul(acc, root_), to_->from_int(static_cast<std::int64_t>(c[i])));
        image_[a] = acc;
        back_.emplace(acc, a);
    }
    if (back_.size() != from_->q()) throw std::logic_error("embedding is not injective");
}

elem_t Embedding::map(elem_t a) const {
    if (identity_) return a;
    if (from_->s() == 1) {
        if (a >= from_->q()) throw std::invalid_argument("element out of range");
        return a; // constants have the same label in both fields
    }
    return image_.at(a);
}

bool Embedding::in_subfield(elem_t a) const {
    if (identity_) return true;
    if (from_->s() == 1) return a < from_->q();
    return back_.count(a) != 0;
}

elem_t Embedding::descend(elem_t a) const {
    if (identity_) return a;
    if (from_->s() == 1) {
        if (a < from_->q()) return a;
        throw std::invalid_argument("element is not in the base subfield");
    }
    auto it = back_.find(a);
    if (it == back_.end()) throw std::invalid_argument("element is not in the base subfield");
    return it->second;
}

namespace {

// Invert a d x d matrix over GF(p); row-major.  Throws if singular.
std::vector<std::uint64_t> invert_mod_p(std::vector<std::uint64_t> a, std::size_t d, std::uint64_t p) {
    auto mulp = [p](std::uint64_t x, std::uint64_t y) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
    };
    auto invp = [&](std::uint64_t x) {
        std::uint64_t r = 1, e = p - 2, b = x;
        while (e > 0) {
            if (e & 1) r = mulp(r, b);
            b = mulp(b, b);
            e >>= 1;
        }
        return r;
    };
    std::vector<std::uint64_t> inv(d * d, 0);
    for (std::size_t i = 0; i < d; ++i) inv[i * d + i] = 1;
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        while (piv < d && a[piv * d + col] == 0) ++piv;
        if (piv == d) throw std::logic_error("coordinate matrix is singular");
        if (piv != col)
            for (std::size_t j = 0; j < d; ++j) {
                std::swap(a[piv * d + j], a[col * d + j]);
                std::swap(inv[piv * d + j], inv[col * d + j]);
            }
        std::uint64_t s = invp(a[col * d + col]);
        for (std::size_t j = 0; j < d; ++j) {
            a[col * d + j] = mulp(a[col * d + j], s);
            inv[col * d + j] = mulp(inv[col * d + j], s);
        }
        for (std::size_t r = 0; r < d; ++r) {
            if (r == col || a[r * d + col] == 0) continue;
            std::uint64_t f = a[r * d + col];
            for (std::size_t j = 0; j < d; ++j) {
                a[r * d + j] = (a[r * d + j] + mulp(p - f, a[col * d + j])) % p;
                inv[r * d + j] = (inv[r * d + j] + mulp(p - f, inv[col * d + j])) % p;
            }
        }
    }
    return inv;
}

} // namespace

RootSystem::RootSystem(FieldPtr base, std::uint32_t m, elem_t lambda)
    : base_(std::move(base)),
      m_(m),
      lambda_(lambda),
      t_(splitting_field_degree(base_, m, lambda)),
      ext_(t_ == 1 ? base_ : Field::make(base_->p(), base_->s() * t_)),
      emb_(base_, ext_) {
    if (!ext_->has_tables())
        throw std::invalid_argument("splitting field exceeds the table-backed size limit");

    const std::uint64_t Q = ext_->q();
    elem_t g = ext_->generator();
    xi_ = ext_->pow(g, (Q - 1) / m_);

    // alpha = g^j for the least j with (g^j)^m = lambda; solving
    // j*m = log(lambda) (mod Q-1) gives j = (log/m) mod ((Q-1)/m).
    elem_t lam = emb_.map(lambda_);
    std::uint64_t l0 = ext_->log(lam);
    if (l0 % m_ != 0) throw std::logic_error("lambda has no m-th root in the splitting field");
    std::uint64_t j0 = (l0 / m_) % ((Q - 1) / m_);
    alpha_ = ext_->pow(g, j0);

    omega_.resize(m_);
    elem_t w = alpha_;
    for (std::uint32_t k = 0; k < m_; ++k) {
        omega_[k] = w;
        if (!index_.emplace(w, k).second) throw std::logic_error("repeated root of x^m - lambda");
        if (ext_->pow(w, m_) != lam) throw std::logic_error("omega[k]^m != lambda");
        w = ext_->mul(w, xi_);
    }

    frob_.resize(m_);
    for (std::uint32_t k = 0; k < m_; ++k) {
        elem_t img = ext_->pow(omega_[k], base_->q());
        auto it = index_.find(img);
        if (it == index_.end()) throw std::logic_error("Frobenius image is not a root");
        frob_[k] = it->second;
    }

    if (base_->s() > 1 && t_ > 1) {
        // columns indexed (k, j): coefficients of emb(basis_j) * x^k where
        // basis_j is the j-th power of the base residue class
        const std::size_t S = ext_->s();
        const std::uint64_t p = ext_->p();
        std::vector<std::uint64_t> mat(S * S, 0);
        elem_t xbar = ext_->from_coeffs(std::vector<std::uint64_t>{0, 1});
        elem_t base_res = emb_.map(base_->from_coeffs(std::vector<std::uint64_t>{0, 1}));
        elem_t xk = 1;
        for (std::uint32_t k = 0; k < t_; ++k) {
            elem_t bj = 1;
            for (std::uint32_t j = 0; j < base_->s(); ++j) {
                auto c = ext_->coeffs(ext_->mul(xk, bj));
                std::size_t col = static_cast<std::size_t>(k) * base_->s() + j;
                for (std::size_t r = 0; r < S; ++r) mat[r * S + col] = c[r];
                bj = ext_->mul(bj, base_res);
            }
            xk = ext_->mul(xk, xbar);
        }
        coord_matrix_ = invert_mod_p(std::move(mat), S, p);
    }
}

RootSystemPtr RootSystem::build(const FieldPtr& base, std::uint32_t m, elem_t lambda) {
    return RootSystemPtr(new RootSystem(base, m, lambda));
}

std::uint32_t RootSystem::index_of(elem_t beta) const {
    auto it = index_.find(beta);
    if (it == index_.end()) throw std::invalid_argument("element is not a root of x^m - lambda");
    return it->second;
}

std::vector<std::uint32_t> RootSystem::frobenius_orbit(std::uint32_t k) const {
    if (k >= m_) throw std::invalid_argument("root index out of range");
    std::vector<std::uint32_t> orbit;
    std::uint32_t cur = k;
    do {
        orbit.push_back(cur);
        cur = frob_[cur];
    } while (cur != k);
    return orbit;
}

std::uint64_t RootSystem::closure(std::uint64_t index_mask) const {
    if (m_ > 64) throw std::invalid_argument("index masks require m <= 64");
    std::uint64_t closed = index_mask;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::uint32_t k = 0; k < m_; ++k) {
            if ((closed >> k) & 1) {
                std::uint64_t bit = std::uint64_t{1} << frob_[k];
                if (!(closed & bit)) {
                    closed |= bit;
                    changed = true;
                }
            }
        }
    }
    return closed;
}

bool RootSystem::is_closed(std::uint64_t index_mask) const {
    return closure(index_mask) == index_mask;
}

std::vector<elem_t> RootSystem::coords_over_base(elem_t v) const {
    std::vector<elem_t> out(t_);
    if (base_->s() == 1) {
        auto c = ext_->coeffs(v); // prime base: coefficients are the coordinates
        for (std::uint32_t k = 0; k < t_; ++k) out[k] = c[k];
        return out;
    }
    if (t_ == 1) {
        out[0] = emb_.descend(v);
        return out;
    }
    const std::size_t S = ext_->s();
    const std::uint64_t p = ext_->p();
    auto c = ext_->coeffs(v);
    std::vector<std::uint64_t> w(S, 0);
    for (std::size_t r = 0; r < S; ++r) {
        unsigned __int128 acc = 0;
        for (std::size_t j = 0; j < S; ++j) acc += static_cast<unsigned __int128>(coord_matrix_[r * S + j]) * c[j];
        w[r] = static_cast<std::uint64_t>(acc % p);
    }
    for (std::uint32_t k = 0; k < t_; ++k) {
        std::span<const std::uint64_t> slice(w.data() + static_cast<std::size_t>(k) * base_->s(), base_->s());
        out[k] = base_->from_coeffs(slice);
    }
    return out;
}

} // namespace qtspec
