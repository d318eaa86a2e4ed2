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

#include "qtspec/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qtspec {

namespace {

constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 40;
constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 16;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

/* Plain polynomial arithmetic over GF(p) used only during construction
   (irreducibility testing), before any Field instance exists. */
using PVec = std::vector<std::uint64_t>;

void pv_trim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pv_mulmod(const PVec& a, const PVec& b, const PVec& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PVec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    // reduce mod monic f
    std::size_t d = f.size() - 1;
    while (r.size() > d) {
        std::uint64_t c = r.back();
        std::size_t k = r.size() - 1 - d;
        if (c != 0)
            for (std::size_t i = 0; i <= d; ++i)
                r[k + i] = (r[k + i] + mulmod(c, (p - f[i]) % p, p)) % p;
        r.pop_back();
        pv_trim(r);
        if (r.size() <= d) break;
    }
    pv_trim(r);
    return r;
}

PVec pv_powmod_x(std::uint64_t e_base, std::uint32_t e_exp, const PVec& f, std::uint64_t p) {
    // x^(e_base^e_exp) mod f by iterated powering
    PVec x = {0, 1};
    pv_trim(x);
    PVec acc = x;
    for (std::uint32_t round = 0; round < e_exp; ++round) {
        // acc <- acc^e_base mod f, square-and-multiply
        PVec result = {1};
        PVec base = acc;
        std::uint64_t e = e_base;
        while (e > 0) {
            if (e & 1) result = pv_mulmod(result, base, f, p);
            base = pv_mulmod(base, base, f, p);
            e >>= 1;
        }
        acc = result;
    }
    return acc;
}

PVec pv_gcd(PVec a, PVec b, std::uint64_t p) {
    pv_trim(a);
    pv_trim(b);
    while (!b.empty()) {
        // a mod b with b scaled monic on the fly
        std::uint64_t lead_inv = 1;
        {   // inverse of leading coeff of b mod p
            std::uint64_t x = b.back(), r = 1, e = p - 2;
            while (e > 0) {
                if (e & 1) r = mulmod(r, x, p);
                x = mulmod(x, x, p);
                e >>= 1;
            }
            lead_inv = r;
        }
        while (a.size() >= b.size() && !a.empty()) {
            std::uint64_t c = mulmod(a.back(), lead_inv, p);
            std::size_t k = a.size() - b.size();
            if (c != 0)
                for (std::size_t i = 0; i < b.size(); ++i)
                    a[k + i] = (a[k + i] + mulmod(c, (p - b[i]) % p, p)) % p;
            a.pop_back();
            pv_trim(a);
        }
        std::swap(a, b);
    }
    return a;
}

bool pv_is_irreducible(const PVec& f, std::uint64_t p) {
    std::uint32_t s = static_cast<std::uint32_t>(f.size() - 1);
    if (s == 1) return true;
    // x^(p^s) == x mod f
    PVec xps = pv_powmod_x(p, s, f, p);
    PVec x = {0, 1};
    if (xps != x) return false;
    // gcd(x^(p^(s/r)) - x, f) == 1 for every prime r | s
    for (std::uint64_t r : prime_factors(s)) {
        PVec g = pv_powmod_x(p, s / static_cast<std::uint32_t>(r), f, p);
        // g - x
        if (g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] + p - 1) % p;
        pv_trim(g);
        PVec d = pv_gcd(g, f, p);
        if (!(d.size() == 1)) return false;
    }
    return true;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

Field::Field(std::uint64_t p, std::uint32_t s) : p_(p), s_(s) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (s == 0) throw std::invalid_argument("field extension degree must be positive");
    q_ = 1;
    for (std::uint32_t i = 0; i < s; ++i) {
        if (q_ > kMaxFieldSize / p) throw std::invalid_argument("field size exceeds 2^40");
        q_ *= p;
    }

    if (s_ == 1) {
        modulus_ = {0, 1}; // x
    } else {
        // lexicographically first monic irreducible of degree s
        bool found = false;
        for (std::uint64_t tail = 0; tail < q_; ++tail) {
            PVec f(s_ + 1, 0);
            std::uint64_t v = tail;
            for (std::uint32_t i = 0; i < s_; ++i) {
                f[i] = v % p_;
                v /= p_;
            }
            f[s_] = 1;
            if (pv_is_irreducible(f, p_)) {
                modulus_ = f;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("no irreducible modulus found");
    }

    unit_factors_ = prime_factors(q_ - 1);

    // smallest label of full multiplicative order
    if (q_ == 2) {
        generator_ = 1;
    } else {
        for (elem_t cand = 2; cand < q_; ++cand) {
            bool primitive = true;
            for (std::uint64_t r : unit_factors_) {
                if (pow_generic(cand, (q_ - 1) / r) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                generator_ = cand;
                break;
            }
        }
        if (generator_ == 0) throw std::logic_error("no primitive element found");
    }

    if (q_ <= kTableLimit) build_tables();
}

void Field::build_tables() {
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    elem_t acc = 1;
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = acc;
        log_[acc] = static_cast<std::uint32_t>(i);
        acc = mul_generic(acc, generator_);
    }
    if (acc != 1) throw std::logic_error("generator order mismatch");
    if (s_ > 1) {
        digits_.resize(q_ * s_);
        for (std::uint64_t a = 0; a < q_; ++a) {
            std::uint64_t v = a;
            for (std::uint32_t i = 0; i < s_; ++i) {
                digits_[a * s_ + i] = static_cast<std::uint8_t>(v % p_);
                v /= p_;
            }
        }
    }
    tables_ = true;
}

elem_t Field::add(elem_t a, elem_t b) const {
    if (s_ == 1) return (a + b) % p_;
    if (tables_) {
        const std::uint8_t* da = &digits_[a * s_];
        const std::uint8_t* db = &digits_[b * s_];
        elem_t out = 0, pw = 1;
        for (std::uint32_t i = 0; i < s_; ++i) {
            std::uint64_t d = da[i] + db[i];
            if (d >= p_) d -= p_;
            out += d * pw;
            pw *= p_;
        }
        return out;
    }
    elem_t out = 0, pw = 1;
    for (std::uint32_t i = 0; i < s_; ++i) {
        std::uint64_t d = a % p_ + b % p_;
        if (d >= p_) d -= p_;
        a /= p_;
        b /= p_;
        out += d * pw;
        pw *= p_;
    }
    return out;
}

elem_t Field::neg(elem_t a) const {
    if (s_ == 1) return a == 0 ? 0 : p_ - a;
    elem_t out = 0, pw = 1;
    for (std::uint32_t i = 0; i < s_; ++i) {
        std::uint64_t d = a % p_;
        a /= p_;
        out += (d == 0 ? 0 : p_ - d) * pw;
        pw *= p_;
    }
    return out;
}

elem_t Field::sub(elem_t a, elem_t b) const { return add(a, neg(b)); }

elem_t Field::mul_generic(elem_t a, elem_t b) const {
    if (a == 0 || b == 0) return 0;
    if (s_ == 1) return mulmod(a, b, p_);
    PVec ca(s_, 0), cb(s_, 0);
    {
        std::uint64_t v = a;
        for (std::uint32_t i = 0; i < s_; ++i) { ca[i] = v % p_; v /= p_; }
        v = b;
        for (std::uint32_t i = 0; i < s_; ++i) { cb[i] = v % p_; v /= p_; }
    }
    PVec r = pv_mulmod(ca, cb, modulus_, p_);
    elem_t out = 0, pw = 1;
    for (std::uint32_t i = 0; i < s_; ++i) {
        out += (i < r.size() ? r[i] : 0) * pw;
        pw *= p_;
    }
    return out;
}

elem_t Field::mul(elem_t a, elem_t b) const {
    if (a == 0 || b == 0) return 0;
    if (s_ == 1) return mulmod(a, b, p_);
    if (tables_) {
        std::uint64_t e = log_[a] + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }
    return mul_generic(a, b);
}

elem_t Field::inv(elem_t a) const {
    if (a == 0) throw std::invalid_argument("division by zero (field)");
    if (tables_) {
        std::uint64_t e = (q_ - 1 - log_[a]) % (q_ - 1);
        return exp_[e];
    }
    return pow_generic(a, q_ - 2);
}

elem_t Field::pow_generic(elem_t a, std::uint64_t e) const {
    elem_t result = 1, base = a;
    while (e > 0) {
        if (e & 1) result = mul_generic(result, base);
        base = mul_generic(base, base);
        e >>= 1;
    }
    return result;
}

elem_t Field::pow(elem_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    if (tables_) {
        std::uint64_t le = mulmod(log_[a], e % (q_ - 1), q_ - 1);
        return exp_[le];
    }
    return pow_generic(a, e);
}

std::uint64_t Field::element_order(elem_t a) const {
    if (a == 0) throw std::invalid_argument("zero has no multiplicative order");
    std::uint64_t o = q_ - 1;
    for (std::uint64_t r : unit_factors_) {
        while (o % r == 0 && pow(a, o / r) == 1) o /= r;
    }
    return o;
}

std::uint64_t Field::log(elem_t a) const {
    if (a == 0) throw std::invalid_argument("log of zero");
    if (!tables_) throw std::invalid_argument("field too large for discrete logs");
    return log_[a];
}

elem_t Field::from_int(std::int64_t v) const {
    std::int64_t m = static_cast<std::int64_t>(p_);
    std::int64_t r = v % m;
    if (r < 0) r += m;
    return static_cast<elem_t>(r);
}

std::vector<std::uint64_t> Field::coeffs(elem_t a) const {
    std::vector<std::uint64_t> c(s_);
    for (std::uint32_t i = 0; i < s_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

elem_t Field::from_coeffs(std::span<const std::uint64_t> c) const {
    if (c.size() > s_) throw std::invalid_argument("coefficient vector longer than field degree");
    elem_t out = 0, pw = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= p_) throw std::invalid_argument("coefficient out of range");
        out += c[i] * pw;
        pw *= p_;
    }
    return out;
}

std::string Field::format_element(elem_t a) const {
    std::ostringstream os;
    auto c = coeffs(a);
    std::size_t len = c.size();
    while (len > 1 && c[len - 1] == 0) --len; // canonical form trims high zeros
    for (std::size_t i = 0; i < len; ++i) {
        if (i) os << ',';
        os << c[i];
    }
    return os.str();
}

elem_t Field::parse_element(const std::string& text) const {
    std::vector<std::uint64_t> c;
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, ',')) {
        std::size_t pos = 0;
        std::uint64_t v = std::stoull(part, &pos);
        if (pos != part.size()) throw std::invalid_argument("malformed field element: " + text);
        c.push_back(v);
    }
    if (c.empty()) throw std::invalid_argument("empty field element");
    return from_coeffs(c);
}

FieldPtr Field::make(std::uint64_t p, std::uint32_t s) {
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, std::uint32_t>, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, s);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    FieldPtr f(new Field(p, s));
    cache.emplace(key, f);
    return f;
}

FieldPtr make_field(std::uint64_t p, std::uint32_t s) { return Field::make(p, s); }

} // namespace qtspec
