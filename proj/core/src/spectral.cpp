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

#include "qtspec/spectral.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "qtspec/poly.hpp"

namespace qtspec {

std::uint64_t Distance::value() const {
    if (!finite_) throw std::logic_error("infinite distance has no finite value");
    return v_;
}

std::string Distance::to_string() const {
    return finite_ ? std::to_string(v_) : std::string("inf");
}

std::ostream& operator<<(std::ostream& os, const Distance& d) {
    return os << d.to_string();
}

const EigenvalueInfo* SpectralData::find(std::uint32_t index) const {
    for (const EigenvalueInfo& ev : eigenvalues)
        if (ev.index == index) return &ev;
    return nullptr;
}

namespace {

Matrix eval_block(const QtCode& code, const RootSystem& rs, std::uint32_t index) {
    return code.generator_matrix().eval_embedded(rs.embedding(), rs.omega(index));
}

} // namespace

SpectralData spectral_data(const QtCode& code) {
    const RootSystemPtr& rs = code.roots();
    const Poly det_ext = embed_poly(determinant(code.generator_matrix()), rs->embedding());

    SpectralData out;
    out.roots = rs;
    out.omega_bar_mask = 0;
    std::size_t total = 0;
    for (std::uint32_t k = 0; k < rs->m(); ++k) {
        const std::size_t mult = root_multiplicity(det_ext, rs->omega(k));
        if (mult == 0) continue;
        Matrix v = eval_block(code, *rs, k).null_space();
        if (v.rows() != mult)
            throw std::logic_error("eigenspace dimension disagrees with root multiplicity");
        total += mult;
        out.omega_bar.push_back(k);
        if (rs->m() <= 64) out.omega_bar_mask |= std::uint64_t{1} << k;
        out.eigenvalues.push_back(
            EigenvalueInfo{k, rs->omega(k), static_cast<std::uint32_t>(mult), std::move(v)});
    }
    // det G is a product of monic divisors of x^m - lambda, so its roots all
    // lie among the omega[k] and the multiplicities must exhaust its degree.
    if (total != static_cast<std::size_t>(det_ext.degree()))
        throw std::logic_error("eigenvalue multiplicities do not exhaust det G");
    return out;
}

Matrix eigenspace(const QtCode& code, std::uint32_t index) {
    const RootSystemPtr& rs = code.roots();
    if (index >= rs->m()) throw std::invalid_argument("root index out of range");
    return eval_block(code, *rs, index).null_space();
}

Matrix common_eigenspace(const QtCode& code, std::span<const std::uint32_t> indices) {
    const RootSystemPtr& rs = code.roots();
    if (indices.empty()) throw std::invalid_argument("empty eigenvalue index set");
    std::vector<std::uint32_t> idx(indices.begin(), indices.end());
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());

    const std::uint32_t ell = code.ell();
    std::vector<std::vector<elem_t>> rows;
    rows.reserve(idx.size() * ell);
    for (std::uint32_t k : idx) {
        if (k >= rs->m()) throw std::invalid_argument("root index out of range");
        Matrix block = eval_block(code, *rs, k);
        if (block.rank() == ell)
            throw std::invalid_argument("index " + std::to_string(k) +
                                        " is not an eigenvalue of the code");
        for (std::size_t r = 0; r < block.rows(); ++r)
            rows.emplace_back(block.row(r).begin(), block.row(r).end());
    }
    return Matrix::from_rows(rs->ext(), rows).null_space();
}

Eigencode eigencode(const QtCode& code, const Matrix& eigenbasis) {
    const RootSystemPtr& rs = code.roots();
    if (eigenbasis.field() != rs->ext())
        throw std::invalid_argument("eigenbasis must live over the splitting field");
    const std::uint32_t ell = code.ell();
    if (eigenbasis.cols() != ell)
        throw std::invalid_argument("eigenbasis must have ell columns");

    const std::uint32_t t = rs->degree();
    const FieldPtr& base = rs->base();
    Matrix constraints(base, eigenbasis.rows() * t, ell);
    for (std::size_t r = 0; r < eigenbasis.rows(); ++r) {
        for (std::uint32_t j = 0; j < ell; ++j) {
            const std::vector<elem_t> coords = rs->coords_over_base(eigenbasis.at(r, j));
            for (std::uint32_t rr = 0; rr < t; ++rr)
                constraints.set(r * t + rr, j, coords[rr]);
        }
    }

    Matrix basis = constraints.null_space();
    const std::size_t dim = basis.rows();
    if (dim == 0) return Eigencode{std::move(basis), Distance::infinity()};

    const std::uint64_t q = base->q();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (count > (std::uint64_t{1} << 22) / q)
            throw std::runtime_error("eigencode too large to enumerate");
        count *= q;
    }

    const Field& f = *base;
    std::size_t best = ell + 1;
    std::vector<elem_t> word(ell);
    for (std::uint64_t idx = 1; idx < count; ++idx) {
        std::fill(word.begin(), word.end(), 0);
        std::uint64_t rest = idx;
        for (std::size_t i = 0; i < dim; ++i) {
            const elem_t digit = static_cast<elem_t>(rest % q);
            rest /= q;
            if (digit == 0) continue;
            for (std::uint32_t j = 0; j < ell; ++j)
                word[j] = f.add(word[j], f.mul(digit, basis.at(i, j)));
        }
        std::size_t w = 0;
        for (elem_t v : word) w += (v != 0);
        best = std::min(best, w);
        if (best == 1) break;
    }
    return Eigencode{std::move(basis), Distance::finite(best)};
}

Matrix parity_check(const QtCode& code) {
    const SpectralData sd = spectral_data(code);
    const RootSystem& rs = *sd.roots;
    const Field& ext = *rs.ext();
    const std::uint32_t m = rs.m();
    const std::uint32_t ell = code.ell();

    std::vector<std::vector<elem_t>> rows;
    for (const EigenvalueInfo& ev : sd.eigenvalues) {
        for (std::size_t r = 0; r < ev.eigenspace.rows(); ++r) {
            std::vector<elem_t> row(static_cast<std::size_t>(m) * ell);
            elem_t pw = ext.from_int(1);
            for (std::uint32_t k = 0; k < m; ++k) {
                for (std::uint32_t j = 0; j < ell; ++j)
                    row[static_cast<std::size_t>(k) * ell + j] =
                        ext.mul(pw, ev.eigenspace.at(r, j));
                pw = ext.mul(pw, ev.beta);
            }
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) return Matrix(rs.ext(), 0, static_cast<std::size_t>(m) * ell);
    return Matrix::from_rows(rs.ext(), rows);
}

} // namespace qtspec
