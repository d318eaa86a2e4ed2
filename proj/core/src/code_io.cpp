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

#include "qtspec/code_io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "qtspec/field.hpp"
#include "qtspec/poly.hpp"

namespace qtspec {

namespace {

struct Cursor {
    const std::string& name;
    std::size_t line;
};

[[noreturn]] void fail(const Cursor& at, const std::string& what) {
    throw std::invalid_argument(at.name + ":" + std::to_string(at.line) + ": " + what);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string piece;
    std::istringstream ss(text);
    while (std::getline(ss, piece, sep)) out.push_back(piece);
    if (!text.empty() && text.back() == sep) out.emplace_back();
    return out;
}

std::uint64_t parse_u64(const Cursor& at, const std::string& token) {
    std::uint64_t v = 0;
    const char* first = token.data();
    const char* last = first + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || token.empty())
        fail(at, "malformed integer '" + token + "'");
    return v;
}

/* Factor a claimed prime power; q = 1 and composites with two distinct
 * prime divisors are rejected. */
void factor_prime_power(const Cursor& at, std::uint64_t q, std::uint64_t& p, std::uint32_t& s) {
    if (q < 2) fail(at, "q must be at least 2");
    p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    s = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++s;
    }
    if (rest != 1) fail(at, "q = " + std::to_string(q) + " is not a prime power");
}

elem_t parse_lambda(const Cursor& at, const std::string& token, const FieldPtr& field) {
    const std::vector<std::string> digits = split(token, ',');
    if (digits.size() > field->s()) fail(at, "lambda has more digits than the field degree");
    elem_t label = 0;
    elem_t scale = 1;
    for (const std::string& d : digits) {
        const std::uint64_t v = parse_u64(at, d);
        if (v >= field->p()) fail(at, "lambda digit " + d + " is not below p");
        label += static_cast<elem_t>(v) * scale;
        scale *= static_cast<elem_t>(field->p());
    }
    return label;
}

Poly parse_entry(const Cursor& at, const std::string& token, const FieldPtr& field) {
    std::vector<elem_t> coeffs;
    for (const std::string& c : split(token, ',')) {
        const std::uint64_t v = parse_u64(at, c);
        if (v >= field->q()) fail(at, "coefficient " + c + " is not below q");
        coeffs.push_back(static_cast<elem_t>(v));
    }
    return Poly(field, coeffs);
}

} // namespace

QtCode parse_code_stream(std::istream& in, const std::string& name) {
    struct RawRow {
        std::size_t line;
        std::vector<std::string> entries;
    };
    struct Scalar {
        bool seen = false;
        std::size_t line = 0;
        std::string token;
    };
    Scalar q_tok, lambda_tok, m_tok, ell_tok;
    std::vector<RawRow> raw_rows;

    std::string text;
    std::size_t lineno = 0;
    while (std::getline(in, text)) {
        ++lineno;
        const Cursor at{name, lineno};
        if (const std::size_t hash = text.find('#'); hash != std::string::npos)
            text.erase(hash);
        std::istringstream words(text);
        std::string directive;
        if (!(words >> directive)) continue;

        if (directive == "gen") {
            RawRow row{lineno, {}};
            std::string entry;
            while (words >> entry) row.entries.push_back(entry);
            if (row.entries.empty()) fail(at, "gen line has no entries");
            raw_rows.push_back(std::move(row));
            continue;
        }

        Scalar* slot = nullptr;
        if (directive == "q") slot = &q_tok;
        else if (directive == "lambda") slot = &lambda_tok;
        else if (directive == "m") slot = &m_tok;
        else if (directive == "ell") slot = &ell_tok;
        else fail(at, "unknown directive '" + directive + "'");

        if (slot->seen) fail(at, "duplicate " + directive + " line");
        if (!(words >> slot->token)) fail(at, directive + " line has no value");
        std::string extra;
        if (words >> extra) fail(at, "trailing token '" + extra + "' after " + directive);
        slot->seen = true;
        slot->line = lineno;
    }

    const Cursor eof{name, lineno};
    if (!q_tok.seen) fail(eof, "missing q line");
    if (!lambda_tok.seen) fail(eof, "missing lambda line");
    if (!m_tok.seen) fail(eof, "missing m line");
    if (!ell_tok.seen) fail(eof, "missing ell line");

    const std::uint64_t q = parse_u64({name, q_tok.line}, q_tok.token);
    std::uint64_t p = 0;
    std::uint32_t s = 0;
    factor_prime_power({name, q_tok.line}, q, p, s);
    const FieldPtr field = Field::make(p, s);

    const elem_t lambda = parse_lambda({name, lambda_tok.line}, lambda_tok.token, field);

    const std::uint64_t m_val = parse_u64({name, m_tok.line}, m_tok.token);
    if (m_val == 0 || m_val > 64) fail({name, m_tok.line}, "m must be between 1 and 64");
    const auto m = static_cast<std::uint32_t>(m_val);

    const std::uint64_t ell_val = parse_u64({name, ell_tok.line}, ell_tok.token);
    if (ell_val == 0 || ell_val > 64) fail({name, ell_tok.line}, "ell must be between 1 and 64");
    const auto ell = static_cast<std::uint32_t>(ell_val);

    std::vector<std::vector<Poly>> gens;
    gens.reserve(raw_rows.size());
    for (const RawRow& row : raw_rows) {
        const Cursor at{name, row.line};
        if (row.entries.size() != ell)
            fail(at, "gen line has " + std::to_string(row.entries.size()) + " entries, expected " +
                         std::to_string(ell));
        std::vector<Poly> parsed;
        parsed.reserve(ell);
        for (const std::string& entry : row.entries) parsed.push_back(parse_entry(at, entry, field));
        gens.push_back(std::move(parsed));
    }

    return QtCode::from_generators(field, lambda, m, ell, gens);
}

QtCode parse_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open code file: " + path);
    return parse_code_stream(in, path);
}

} // namespace qtspec
