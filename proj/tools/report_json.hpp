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

#ifndef QTSPEC_TOOLS_REPORT_JSON_HPP
#define QTSPEC_TOOLS_REPORT_JSON_HPP

#include <json.hpp>

#include "qtspec/bounds.hpp"
#include "qtspec/examples.hpp"
#include "qtspec/oracle.hpp"
#include "qtspec/spectral.hpp"

/* JSON shapes for every witness the library hands out.  Serialization is
 * loss-free for the replayable witnesses (consecutive runs, two-set
 * certificates, independent-set growth traces), so a report can be parsed
 * back and re-verified without recomputing the search. */
namespace qtspec::report {

using nlohmann::json;

inline json js(const Distance& d) {
    if (!d.is_finite()) return "inf";
    return d.value();
}

inline json js(const DefiningSet& s) {
    return json{{"m", s.m}, {"indices", s.indices()}};
}

inline DefiningSet defining_set_from(const json& j) {
    const auto m = j.at("m").get<std::uint32_t>();
    const auto idx = j.at("indices").get<std::vector<std::uint32_t>>();
    return DefiningSet::from_indices(m, idx);
}

inline json js(const ConsecutiveSet& s) {
    return json{{"start", s.start}, {"stride", s.stride}, {"count", s.count}};
}

inline ConsecutiveSet consecutive_from(const json& j) {
    return ConsecutiveSet{j.at("start").get<std::uint32_t>(), j.at("stride").get<std::uint32_t>(),
                          j.at("count").get<std::uint32_t>()};
}

inline const char* name_of(StridePolicy p) {
    return p == StridePolicy::unit ? "unit" : "coprime";
}

inline const char* name_of(DpSource s) {
    switch (s) {
        case DpSource::bch: return "bch";
        case DpSource::ht: return "ht";
        case DpSource::roos: return "roos";
        case DpSource::shift: return "shift";
        case DpSource::oracle: return "oracle";
    }
    return "?";
}

inline json js(const BchResult& r) {
    return json{{"method", "bch"},
                {"value", r.value},
                {"stride_policy", name_of(r.policy)},
                {"run", js(r.run)}};
}

inline BchResult bch_from(const json& j) {
    return BchResult{j.at("value").get<std::uint64_t>(),
                     j.at("stride_policy").get<std::string>() == "unit" ? StridePolicy::unit
                                                                        : StridePolicy::coprime,
                     consecutive_from(j.at("run"))};
}

inline json js(const HtResult& r) {
    return json{{"method", "ht"}, {"value", r.value}, {"e", r.e},   {"delta", r.delta},
                {"n1", r.n1},     {"n2", r.n2},       {"s", r.s}};
}

inline HtResult ht_from(const json& j) {
    return HtResult{j.at("value").get<std::uint64_t>(), j.at("e").get<std::uint32_t>(),
                    j.at("delta").get<std::uint32_t>(),  j.at("n1").get<std::uint32_t>(),
                    j.at("n2").get<std::uint32_t>(),     j.at("s").get<std::uint32_t>()};
}

inline json js(const RoosResult& r) {
    return json{{"method", "roos"}, {"value", r.value},     {"n", js(r.n)},
                {"mprime", js(r.mprime)}, {"m_set", js(r.m_set)}, {"d_n", r.d_n}};
}

inline RoosResult roos_from(const json& j) {
    return RoosResult{j.at("value").get<std::uint64_t>(), consecutive_from(j.at("n")),
                      consecutive_from(j.at("mprime")), defining_set_from(j.at("m_set")),
                      j.at("d_n").get<std::uint32_t>()};
}

inline json js(const std::vector<ShiftStep>& steps) {
    json out = json::array();
    for (const ShiftStep& s : steps) out.push_back(json{{"rotation", s.rotation}, {"added", s.added}});
    return out;
}

inline std::vector<ShiftStep> steps_from(const json& j) {
    std::vector<ShiftStep> out;
    for (const json& s : j)
        out.push_back(ShiftStep{s.at("rotation").get<std::uint32_t>(),
                                s.at("added").get<std::uint32_t>()});
    return out;
}

inline json js(const ShiftResult& r) {
    return json{{"method", "shift"},   {"value", r.value},   {"s_min", js(r.s_min)},
                {"steps", js(r.steps)}, {"a_set", js(r.a_set)}, {"parity_bump", r.parity_bump}};
}

inline ShiftResult shift_from(const json& j) {
    return ShiftResult{j.at("value").get<std::uint64_t>(), defining_set_from(j.at("s_min")),
                       steps_from(j.at("steps")), defining_set_from(j.at("a_set")),
                       j.at("parity_bump").get<bool>()};
}

inline json js(const QtBchResult& r) {
    return json{{"method", "bch"},
                {"value", r.value},
                {"run", js(r.run)},
                {"eigen_distance", js(r.eigen_distance)}};
}

inline json js(const QtHtResult& r) {
    return json{{"method", "ht"}, {"value", r.value}, {"e", r.e},
                {"delta", r.delta}, {"n1", r.n1},     {"n2", r.n2},
                {"s", r.s},         {"eigen_distance", js(r.eigen_distance)}};
}

inline json js(const SpectralRoosResult& r) {
    return json{{"method", "roos"},
                {"value", r.value},
                {"n", js(r.n)},
                {"mprime", js(r.mprime)},
                {"m_set", js(r.m_set)},
                {"mn_set", js(r.mn_set)},
                {"d_n", r.d_n},
                {"eigen_distance", js(r.eigen_distance)}};
}

inline json js(const SpectralShiftResult& r) {
    return json{{"method", "shift"},
                {"value", r.value},
                {"t_set", js(r.t_set)},
                {"eigen_distance", js(r.eigen_distance)},
                {"independent_value", r.independent_value},
                {"s_min", js(r.s_min)},
                {"steps", js(r.steps)},
                {"a_set", js(r.a_set)},
                {"parity_bump", r.parity_bump}};
}

inline json js(const SpectralResult& r) {
    return json{{"method", "spectral"},
                {"value", r.value},
                {"p_requested", js(r.p_requested)},
                {"p_closed", js(r.p_closed)},
                {"dp_source", name_of(r.source)},
                {"d_p", r.d_p},
                {"eigen_distance", js(r.eigen_distance)}};
}

inline json js(const ExampleCheck& c) {
    return json{{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}};
}

inline json js(const ExampleReport& e) {
    json checks = json::array();
    for (const ExampleCheck& c : e.checks) checks.push_back(js(c));
    return json{{"name", e.name},
                {"q", e.q},
                {"m", e.m},
                {"ell", e.ell},
                {"dimension", e.dimension},
                {"omega_bar", js(e.omega_bar)},
                {"shift", js(e.shift)},
                {"roos", js(e.roos)},
                {"bch", js(e.bch)},
                {"block_oracle_distance", e.oracle_distance},
                {"eigencode_distance", js(e.eigen_distance)},
                {"spectral_value", e.spectral_value},
                {"checks", checks},
                {"pass", e.pass}};
}

inline json js(const ExamplesReport& r) {
    json examples = json::array();
    for (const ExampleReport& e : r.examples) examples.push_back(js(e));
    return json{{"command", "examples"}, {"examples", examples}, {"pass", r.pass}};
}

inline json js(const TableCheck& c) {
    return json{{"no", c.no},         {"bch", c.bch},       {"ht", c.ht},
                {"oracle", c.oracle}, {"ok_bch", c.ok_bch}, {"ok_ht", c.ok_ht},
                {"ok_distance", c.ok_distance}, {"seconds", c.seconds}, {"ok", c.ok()}};
}

inline json js(const TableReport& r) {
    json rows = json::array();
    for (const TableCheck& c : r.rows) rows.push_back(js(c));
    return json{{"command", "table1"}, {"rows", rows}, {"pass", r.all_ok()}};
}

} // namespace qtspec::report

#endif // QTSPEC_TOOLS_REPORT_JSON_HPP
