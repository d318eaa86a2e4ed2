#include "doctest.h"

#include <cstdint>
#include <vector>

#include "qtspec/field.hpp"

using namespace qtspec;

namespace {

void check_axioms(const FieldPtr& F) {
    const elem_t q = F->q();
    REQUIRE(F->zero() == 0);
    REQUIRE(F->one() == 1);
    for (elem_t a = 0; a < q; ++a) {
        CHECK(F->add(a, F->zero()) == a);
        CHECK(F->mul(a, F->one()) == a);
        CHECK(F->add(a, F->neg(a)) == 0);
        if (a != 0) CHECK(F->mul(a, F->inv(a)) == 1);
        for (elem_t b = 0; b < q; ++b) {
            CHECK(F->add(a, b) == F->add(b, a));
            CHECK(F->mul(a, b) == F->mul(b, a));
            for (elem_t c = 0; c < q; ++c) {
                CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
                CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
                CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            }
        }
    }
}

} // namespace

TEST_CASE("primality helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(131071));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK_FALSE(is_prime(91));
    CHECK(prime_factors(1).empty());
    CHECK(prime_factors(728) == std::vector<std::uint64_t>{2, 7, 13});
    CHECK(prime_factors(6560) == std::vector<std::uint64_t>{2, 5, 41});
}

TEST_CASE("construction picks the first modulus and generator") {
    struct Row {
        std::uint64_t p;
        std::uint32_t s;
        std::vector<std::uint64_t> modulus;
        elem_t generator;
    };
    // values cross-checked against an independent polynomial-arithmetic oracle
    const Row rows[] = {
        {2, 1, {0, 1}, 1},
        {3, 1, {0, 1}, 2},
        {2, 2, {1, 1, 1}, 2},
        {2, 3, {1, 1, 0, 1}, 2},
        {3, 2, {1, 0, 1}, 4},
        {3, 3, {1, 2, 0, 1}, 3},
        {2, 4, {1, 1, 0, 0, 1}, 2},
        {3, 4, {2, 1, 0, 0, 1}, 3},
        {5, 1, {0, 1}, 2},
        {5, 2, {2, 0, 1}, 6},
    };
    for (const auto& r : rows) {
        CAPTURE(r.p);
        CAPTURE(r.s);
        auto F = Field::make(r.p, r.s);
        CHECK(F->modulus() == r.modulus);
        CHECK(F->generator() == r.generator);
        CHECK(F->element_order(F->generator()) == F->q() - 1);
    }
    // larger table-backed fields still construct deterministically
    CHECK(Field::make(2, 11)->modulus() == std::vector<std::uint64_t>{1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1});
    CHECK(Field::make(3, 6)->modulus() == std::vector<std::uint64_t>{2, 1, 0, 0, 0, 0, 1});
}

TEST_CASE("field axioms hold elementwise") {
    check_axioms(Field::make(2, 3));
    check_axioms(Field::make(3, 3));
    check_axioms(Field::make(5, 1));
    check_axioms(Field::make(2, 4));
}

TEST_CASE("make caches by (p, s)") {
    CHECK(Field::make(3, 2).get() == Field::make(3, 2).get());
    CHECK(Field::make(3, 2).get() != Field::make(3, 1).get());
}

TEST_CASE("make rejects invalid parameters") {
    CHECK_THROWS_AS(Field::make(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 41), std::invalid_argument); // exceeds the size cap
}

TEST_CASE("pow, log and order identities") {
    auto F = Field::make(3, 4);
    const elem_t g = F->generator();
    CHECK(F->pow(F->zero(), 0) == 1);
    CHECK(F->pow(F->zero(), 5) == 0);
    elem_t acc = 1;
    for (std::uint64_t e = 0; e < F->q() - 1; ++e) {
        CHECK(F->pow(g, e) == acc);
        CHECK(F->log(acc) == e);
        acc = F->mul(acc, g);
    }
    CHECK(acc == 1); // g has full order
    CHECK(F->pow(g, F->q() - 1) == 1);
    CHECK(F->pow(g, 2 * (F->q() - 1) + 7) == F->pow(g, 7));
    CHECK_THROWS_AS(F->log(0), std::invalid_argument);
    // element orders partition the unit group
    for (elem_t a = 1; a < F->q(); ++a) {
        std::uint64_t d = F->element_order(a);
        CHECK((F->q() - 1) % d == 0);
        CHECK(F->pow(a, d) == 1);
    }
}

TEST_CASE("from_int reduces into the prime subfield") {
    auto F = Field::make(5, 2);
    CHECK(F->from_int(0) == 0);
    CHECK(F->from_int(7) == 2);
    CHECK(F->from_int(-1) == 4);
    CHECK(F->from_int(-10) == 0);
    for (int v = 0; v < 5; ++v) {
        CHECK(F->add(F->from_int(v), F->from_int(-v)) == 0);
    }
}

TEST_CASE("coefficient vectors round trip") {
    auto F = Field::make(3, 3);
    for (elem_t a = 0; a < F->q(); ++a) {
        auto c = F->coeffs(a);
        REQUIRE(c.size() == 3);
        CHECK(F->from_coeffs(c) == a);
    }
    CHECK(F->from_coeffs(std::vector<std::uint64_t>{2, 1}) == 2 + 3);
    CHECK(F->from_coeffs(std::vector<std::uint64_t>{}) == 0);
    CHECK_THROWS_AS(F->from_coeffs(std::vector<std::uint64_t>{3}), std::invalid_argument);
    CHECK_THROWS_AS(F->from_coeffs(std::vector<std::uint64_t>{0, 0, 0, 1}), std::invalid_argument);
}

TEST_CASE("elements format and parse") {
    auto F = Field::make(3, 2);
    CHECK(F->format_element(0) == "0");
    CHECK(F->format_element(5) == "2,1");
    CHECK(F->parse_element("2,1") == 5);
    CHECK(F->parse_element("0") == 0);
    for (elem_t a = 0; a < F->q(); ++a) {
        CHECK(F->parse_element(F->format_element(a)) == a);
    }
    CHECK_THROWS_AS(F->parse_element(""), std::invalid_argument);
    CHECK_THROWS_AS(F->parse_element("1,2,3"), std::invalid_argument);
    CHECK_THROWS_AS(F->parse_element("x"), std::invalid_argument);
    auto P = Field::make(7, 1);
    CHECK(P->format_element(6) == "6");
    CHECK(P->parse_element("6") == 6);
}

TEST_CASE("arithmetic without tables matches the table path") {
    auto big = Field::make(131071, 1); // prime field beyond the table limit
    CHECK_FALSE(big->has_tables());
    CHECK(big->add(131070, 1) == 0);
    CHECK(big->mul(2, 65536) == 1); // 2^17 = 2*q - 2 = q - 1 + (q - 1) ... direct: 131072 mod q = 1
    CHECK(big->mul(big->inv(12345), 12345) == 1);
    CHECK(big->pow(big->generator(), big->q() - 1) == 1);

    auto ext = Field::make(2, 17); // extension beyond the table limit
    CHECK_FALSE(ext->has_tables());
    elem_t a = 0x1abcd, b = 0x00101;
    elem_t ab = ext->mul(a, b);
    CHECK(ext->mul(b, a) == ab);
    CHECK(ext->mul(a, ext->add(b, 1)) == ext->add(ab, a));
    CHECK(ext->mul(ext->inv(a), a) == 1);
}

TEST_CASE("unit group factorization is exposed") {
    auto F = Field::make(3, 4);
    CHECK(F->unit_group_factors() == std::vector<std::uint64_t>{2, 5});
}
