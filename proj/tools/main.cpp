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

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qtspec/code_io.hpp"
#include "qtspec/examples.hpp"
#include "report_json.hpp"

namespace {

using namespace qtspec;
using nlohmann::json;
using report::js;

/* QTSPEC_ORACLE_BUDGET overrides any command's enumeration budget. */
OracleConfig oracle_budget(std::uint64_t fallback) {
    if (const char* env = std::getenv("QTSPEC_ORACLE_BUDGET")) {
        try {
            return OracleConfig{std::stoull(env)};
        } catch (const std::exception&) {
            throw std::invalid_argument("QTSPEC_ORACLE_BUDGET is not an integer");
        }
    }
    return OracleConfig{fallback};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json code_summary(const QtCode& code) {
    return json{{"q", code.field()->q()},
                {"lambda", code.lambda()},
                {"m", code.m()},
                {"ell", code.ell()},
                {"dimension", code.dimension()}};
}

elem_t parse_element(const FieldPtr& field, const std::string& digits) {
    elem_t label = 0;
    elem_t scale = 1;
    std::istringstream ss(digits);
    std::string d;
    while (std::getline(ss, d, ',')) {
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(d, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (d.empty() || used != d.size() || v >= field->p())
            throw std::invalid_argument("bad field element digit '" + d + "'");
        label += static_cast<elem_t>(v) * scale;
        scale *= static_cast<elem_t>(field->p());
    }
    return label;
}

struct CapsFlags {
    SearchCaps caps;

    void attach(CLI::App* cmd) {
        cmd->add_option("--shift-state-cap", caps.shift_state_cap,
                        "Independent-set search state limit");
        cmd->add_option("--mprime-cap", caps.mprime_cap, "Two-set window length limit");
        cmd->add_flag("--ht-general-n1", caps.ht_general_n1,
                      "Search all coprime first strides in the translate-pattern bound");
        cmd->add_flag("--roos-dn-from-ht", caps.roos_dn_from_ht,
                      "Score two-set gaps with the translate-pattern bound");
    }
};

int run_bounds(const std::string& path, std::vector<std::string> methods,
               const std::string& stride, const std::string& dp_source,
               const std::vector<std::uint32_t>& p_indices, const SearchCaps& caps) {
    const QtCode code = parse_code_file(path);
    const SpectralData sd = spectral_data(code);
    const DefiningSet omega_bar{code.m(), sd.omega_bar_mask};

    const StridePolicy policy =
        stride == "coprime" ? StridePolicy::coprime : StridePolicy::unit;
    DpSource source = DpSource::shift;
    if (dp_source == "bch") source = DpSource::bch;
    else if (dp_source == "ht") source = DpSource::ht;
    else if (dp_source == "roos") source = DpSource::roos;
    else if (dp_source == "oracle") source = DpSource::oracle;

    if (methods.empty()) methods = {"bch", "ht", "roos", "shift", "spectral"};

    json results = json::array();
    for (const std::string& method : methods) {
        if (method == "bch") results.push_back(js(qt_bch_bound(code, policy)));
        else if (method == "ht") results.push_back(js(qt_ht_bound(code, caps)));
        else if (method == "roos") results.push_back(js(spectral_roos(code, caps)));
        else if (method == "shift") results.push_back(js(spectral_shift(code, caps)));
        else if (method == "spectral") {
            const DefiningSet p = p_indices.empty()
                                      ? omega_bar
                                      : DefiningSet::from_indices(code.m(), p_indices);
            results.push_back(js(spectral_bound(code, p, source, caps,
                                                oracle_budget(OracleConfig{}.max_work))));
        } else {
            throw std::invalid_argument("unknown method '" + method + "'");
        }
    }

    emit(json{{"command", "bounds"},
              {"code", code_summary(code)},
              {"omega_bar", js(omega_bar)},
              {"results", results}});
    return 0;
}

int run_eigen(const std::string& path) {
    const QtCode code = parse_code_file(path);
    const SpectralData sd = spectral_data(code);

    json evs = json::array();
    for (const EigenvalueInfo& ev : sd.eigenvalues) {
        const Eigencode ec = eigencode(code, ev.eigenspace);
        evs.push_back(json{{"index", ev.index},
                           {"multiplicity", ev.multiplicity},
                           {"eigenspace_dimension", ev.eigenspace.rows()},
                           {"eigencode_distance", js(ec.distance)}});
    }

    json common = nullptr;
    if (!sd.omega_bar.empty()) {
        const Eigencode ec = eigencode(code, common_eigenspace(code, sd.omega_bar));
        common = json{{"indices", sd.omega_bar}, {"eigencode_distance", js(ec.distance)}};
    }

    const Matrix h = parity_check(code);
    emit(json{{"command", "eigen"},
              {"code", code_summary(code)},
              {"omega_bar", js(DefiningSet{code.m(), sd.omega_bar_mask})},
              {"eigenvalues", evs},
              {"common_eigenspace", common},
              {"parity_check", json{{"rows", h.rows()}, {"rank", h.rank()}}}});
    return 0;
}

int run_mindist(const std::string& path) {
    const QtCode code = parse_code_file(path);
    const std::uint64_t d = qt_min_distance(code, oracle_budget(OracleConfig{}.max_work));
    emit(json{{"command", "mindist"}, {"code", code_summary(code)}, {"distance", d}});
    return 0;
}

int run_constacyclic(std::uint64_t q, std::uint32_t m, const std::string& lambda_digits,
                     const std::vector<std::uint32_t>& defset, bool with_mindist,
                     const SearchCaps& caps) {
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    std::uint32_t s = 0;
    std::uint64_t rest = q;
    while (p > 1 && rest % p == 0) {
        rest /= p;
        ++s;
    }
    if (q < 2 || rest != 1) throw std::invalid_argument("q is not a prime power");

    const FieldPtr field = Field::make(p, s);
    const elem_t lambda = parse_element(field, lambda_digits);
    auto rs = RootSystem::build(field, m, lambda);

    const DefiningSet requested = DefiningSet::from_indices(m, defset);
    const DefiningSet closed{m, rs->closure(requested.mask)};

    json out{{"command", "constacyclic"},
             {"q", q},
             {"m", m},
             {"lambda", lambda},
             {"defining", js(requested)},
             {"closure", js(closed)},
             {"bch", js(bch_bound(closed, StridePolicy::unit))},
             {"bch_coprime", js(bch_bound(closed, StridePolicy::coprime))},
             {"ht", js(ht_bound(closed, caps))},
             {"roos", js(roos_bound(closed, caps))},
             {"shift", js(shift_bound(*rs, closed, caps))}};

    if (with_mindist) {
        const Poly g = constacyclic_from_defining_set(*rs, closed);
        std::vector<std::vector<Poly>> rows{{g}};
        const QtCode block = QtCode::from_generators(field, lambda, m, 1, rows);
        out["distance"] = qt_min_distance(block, oracle_budget(OracleConfig{}.max_work));
    }

    emit(out);
    return 0;
}

int run_table1() {
    const TableReport report = verify_table1(oracle_budget(std::uint64_t{1} << 30));
    emit(js(report));
    for (const TableCheck& row : report.rows)
        if (!row.ok())
            std::cerr << "row " << row.no << ": bch " << row.bch << " ht " << row.ht << " oracle "
                      << row.oracle << " disagrees with the published line\n";
    return report.all_ok() ? 0 : 1;
}

int run_examples_cmd() {
    const ExamplesReport report = run_examples(oracle_budget(std::uint64_t{1} << 30));
    emit(js(report));
    for (const ExampleReport& e : report.examples)
        for (const ExampleCheck& c : e.checks)
            if (!c.pass)
                std::cerr << e.name << ": " << c.name << " expected " << c.expected << " got "
                          << c.actual << "\n";
    return report.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral distance bounds for quasi-twisted codes"};
    app.require_subcommand(1);

    std::string code_path, stride = "unit", dp_source = "shift", lambda_digits = "1";
    std::vector<std::string> methods;
    std::vector<std::uint32_t> p_indices, defset;
    std::uint64_t q = 2;
    std::uint32_t m = 0;
    bool with_mindist = false;
    CapsFlags bounds_caps, cc_caps;

    CLI::App* bounds = app.add_subcommand("bounds", "Every distance bound for a code file");
    bounds->add_option("--code", code_path, "Code description file")->required();
    bounds->add_option("--methods", methods, "Subset of bch,ht,roos,shift,spectral")
        ->delimiter(',');
    bounds->add_option("--stride-policy", stride, "bch run stride policy")
        ->check(CLI::IsMember({"unit", "coprime"}));
    bounds->add_option("--dp-source", dp_source, "Block-bound source for the spectral method")
        ->check(CLI::IsMember({"bch", "ht", "roos", "shift", "oracle"}));
    bounds->add_option("--p", p_indices, "Eigenvalue index set for the spectral method")
        ->delimiter(',');
    bounds_caps.attach(bounds);

    CLI::App* eigen = app.add_subcommand("eigen", "Eigenvalues, eigenspaces, and the parity check");
    eigen->add_option("--code", code_path, "Code description file")->required();

    CLI::App* mindist = app.add_subcommand("mindist", "Enumerated minimum distance");
    mindist->add_option("--code", code_path, "Code description file")->required();

    CLI::App* cc = app.add_subcommand("constacyclic", "Bounds for a block code by defining set");
    cc->add_option("--q", q, "Field size")->required();
    cc->add_option("--m", m, "Block length")->required();
    cc->add_option("--lambda", lambda_digits, "Constashift unit, base-p digits");
    cc->add_option("--defset", defset, "Defining set indices")->required()->delimiter(',');
    cc->add_flag("--mindist", with_mindist, "Also enumerate the exact distance");
    cc_caps.attach(cc);

    CLI::App* table = app.add_subcommand("table1", "Recompute the reference table");
    CLI::App* examples = app.add_subcommand("examples", "Run the two worked modules end to end");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bounds->parsed())
            return run_bounds(code_path, methods, stride, dp_source, p_indices, bounds_caps.caps);
        if (eigen->parsed()) return run_eigen(code_path);
        if (mindist->parsed()) return run_mindist(code_path);
        if (cc->parsed())
            return run_constacyclic(q, m, lambda_digits, defset, with_mindist, cc_caps.caps);
        if (table->parsed()) return run_table1();
        if (examples->parsed()) return run_examples_cmd();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
