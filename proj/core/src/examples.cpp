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

#include "qtspec/examples.hpp"

#include <sstream>
#include <utility>

#include "qtspec/root_system.hpp"

namespace qtspec {

namespace {

std::string fmt(std::uint64_t v) { return std::to_string(v); }

std::string fmt(const Distance& d) {
    std::ostringstream os;
    os << d;
    return os.str();
}

std::string fmt(const DefiningSet& s) {
    std::string out;
    for (std::uint32_t k : s.indices()) {
        if (!out.empty()) out += ',';
        out += std::to_string(k);
    }
    return out;
}

void check(ExampleReport& rep, std::string name, std::string expected, std::string actual) {
    const bool pass = expected == actual;
    rep.checks.push_back({std::move(name), std::move(expected), std::move(actual), pass});
    if (!pass) rep.pass = false;
}

/* ell diagonal copies of the constacyclic code with the given zero set;
 * the eigenvalue set of the module is then exactly that zero set and the
 * common eigenspace is the identity. */
QtCode diagonal_module(const RootSystemPtr& rs, const DefiningSet& zeros, std::uint32_t ell) {
    const FieldPtr f = rs->base();
    const Poly g = constacyclic_from_defining_set(*rs, zeros);
    std::vector<std::vector<Poly>> rows(ell, std::vector<Poly>(ell, Poly::zero(f)));
    for (std::uint32_t i = 0; i < ell; ++i) rows[i][i] = g;
    return QtCode::from_generators(f, rs->lambda(), rs->m(), ell, rows);
}

/* Shared pipeline: build the module, read its eigenvalue set back, compute
 * every bound plus the enumerated distance of one block. */
ExampleReport run_module(std::string name, const FieldPtr& f, std::uint32_t m, std::uint32_t ell,
                         const DefiningSet& zeros, const OracleConfig& cfg) {
    ExampleReport rep;
    rep.name = std::move(name);
    rep.q = f->q();
    rep.m = m;
    rep.ell = ell;
    rep.pass = true;

    auto rs = RootSystem::build(f, m, f->one());
    const QtCode code = diagonal_module(rs, zeros, ell);
    rep.dimension = code.dimension();

    const SpectralData sd = spectral_data(code);
    rep.omega_bar = DefiningSet{m, sd.omega_bar_mask};
    check(rep, "eigenvalue-set", fmt(zeros), fmt(rep.omega_bar));

    rep.shift = shift_bound(*code.roots(), rep.omega_bar);
    rep.roos = roos_bound(rep.omega_bar);
    rep.bch = bch_bound(rep.omega_bar);
    rep.eigen_distance =
        eigencode(code, common_eigenspace(code, sd.omega_bar)).distance;

    const QtCode block = diagonal_module(rs, zeros, 1);
    rep.oracle_distance = qt_min_distance(block, cfg);
    return rep;
}

ExampleReport binary_example(const OracleConfig& cfg) {
    auto f2 = Field::make(2, 1);
    auto rs = RootSystem::build(f2, 23, f2->one());
    const DefiningSet zeros = DefiningSet::from_indices(23, rs->frobenius_orbit(1));

    ExampleReport rep = run_module("binary m=23 index 4", f2, 23, 4, zeros, cfg);
    check(rep, "dimension", fmt(std::uint64_t{48}), fmt(rep.dimension));
    check(rep, "independent-set", "7", fmt(rep.shift.value));
    check(rep, "two-set", "5", fmt(rep.roos.value));
    check(rep, "consecutive-run", "5", fmt(rep.bch.value));
    check(rep, "block-oracle", "7", fmt(rep.oracle_distance));
    check(rep, "eigencode-distance", "inf", fmt(rep.eigen_distance));

    const QtCode code = diagonal_module(rs, zeros, 4);
    rep.spectral_value = spectral_bound(code, rep.omega_bar, DpSource::shift, {}, cfg).value;
    check(rep, "spectral", "7", fmt(rep.spectral_value));
    return rep;
}

ExampleReport ternary_example(const OracleConfig& cfg) {
    auto f3 = Field::make(3, 1);
    const std::vector<std::uint32_t> idx{0, 13, 14, 16, 17, 22, 23, 25};
    const DefiningSet zeros = DefiningSet::from_indices(26, idx);

    ExampleReport rep = run_module("ternary m=26 index 4", f3, 26, 4, zeros, cfg);
    check(rep, "dimension", fmt(std::uint64_t{72}), fmt(rep.dimension));
    check(rep, "two-set", "6", fmt(rep.roos.value));
    check(rep, "two-set-gap-distance", "3", fmt(rep.roos.d_n));
    check(rep, "two-set-m-size", "4", fmt(std::uint64_t{rep.roos.m_set.size()}));
    check(rep, "two-set-window", "5", fmt(rep.roos.mprime.count));
    check(rep, "window-within-slack", "yes",
          rep.roos.mprime.count <= rep.roos.m_set.size() + rep.roos.d_n - 2 ? "yes" : "no");
    check(rep, "independent-set", "5", fmt(rep.shift.value));
    check(rep, "block-oracle", "6", fmt(rep.oracle_distance));
    check(rep, "eigencode-distance", "inf", fmt(rep.eigen_distance));

    auto rs = RootSystem::build(f3, 26, f3->one());
    const QtCode code = diagonal_module(rs, zeros, 4);
    rep.spectral_value = spectral_roos(code).value;
    check(rep, "spectral", "6", fmt(rep.spectral_value));
    return rep;
}

} // namespace

ExamplesReport run_examples(const OracleConfig& cfg) {
    ExamplesReport report;
    report.examples.push_back(binary_example(cfg));
    report.examples.push_back(ternary_example(cfg));
    report.pass = true;
    for (const ExampleReport& e : report.examples)
        if (!e.pass) report.pass = false;
    return report;
}

} // namespace qtspec
