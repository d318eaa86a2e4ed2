#include "doctest.h"

#include <cstdint>
#include <vector>

#include "qtspec/root_system.hpp"

using namespace qtspec;

TEST_CASE("splitting field degrees") {
    struct Row {
        std::uint64_t p;
        std::uint32_t s;
        std::uint32_t m;
        elem_t lambda;
        std::uint32_t t;
    };
    const Row rows[] = {
        {2, 1, 23, 1, 11}, {3, 1, 20, 2, 4}, {3, 1, 26, 1, 3},
        {3, 1, 28, 2, 6},  {3, 1, 41, 2, 8}, {5, 1, 6, 4, 2},
        {3, 2, 5, 1, 2},   {2, 1, 1, 1, 1},  {2, 1, 7, 1, 3},
    };
    for (const auto& r : rows) {
        CAPTURE(r.p);
        CAPTURE(r.m);
        CHECK(splitting_field_degree(Field::make(r.p, r.s), r.m, r.lambda) == r.t);
    }
    auto F2 = Field::make(2, 1);
    CHECK_THROWS_AS(splitting_field_degree(F2, 4, 1), std::invalid_argument);  // shares the characteristic
    CHECK_THROWS_AS(splitting_field_degree(F2, 3, 0), std::invalid_argument);  // lambda must be a unit
    CHECK_THROWS_AS(splitting_field_degree(F2, 0, 1), std::invalid_argument);
}

TEST_CASE("embedding of GF(9) into GF(81)") {
    auto sub = Field::make(3, 2);
    auto big = Field::make(3, 4);
    Embedding e(sub, big);
    CHECK_FALSE(e.is_identity());
    CHECK(e.map(0) == 0);
    CHECK(e.map(1) == 1);
    CHECK(e.map(2) == 2);
    std::size_t members = 0;
    for (elem_t a = 0; a < big->q(); ++a) members += e.in_subfield(a) ? 1 : 0;
    CHECK(members == sub->q());
    for (elem_t a = 0; a < sub->q(); ++a) {
        CHECK(e.descend(e.map(a)) == a);
        for (elem_t b = 0; b < sub->q(); ++b) {
            CHECK(e.map(sub->add(a, b)) == big->add(e.map(a), e.map(b)));
            CHECK(e.map(sub->mul(a, b)) == big->mul(e.map(a), e.map(b)));
        }
    }
    CHECK_THROWS_AS(e.descend(big->generator()), std::invalid_argument);
    CHECK_THROWS_AS(Embedding(Field::make(2, 1), big), std::invalid_argument);
    CHECK_THROWS_AS(Embedding(Field::make(3, 3), big), std::invalid_argument);
}

TEST_CASE("identity and prime embeddings") {
    auto F = Field::make(3, 2);
    Embedding id(F, F);
    CHECK(id.is_identity());
    CHECK(id.map(7) == 7);
    CHECK(id.descend(7) == 7);

    Embedding pr(Field::make(3, 1), F);
    CHECK(pr.map(2) == 2);
    CHECK(pr.in_subfield(2));
    CHECK_FALSE(pr.in_subfield(3));
    CHECK(pr.descend(1) == 1);
    CHECK_THROWS_AS(pr.descend(5), std::invalid_argument);
}

TEST_CASE("binary length-23 roots index by doubling") {
    auto rs = RootSystem::build(Field::make(2, 1), 23, 1);
    CHECK(rs->degree() == 11);
    CHECK(rs->ext()->q() == 2048);
    CHECK(rs->alpha() == rs->ext()->one()); // lambda = 1 keeps alpha trivial
    for (std::uint32_t k = 0; k < 23; ++k) {
        CHECK(rs->ext()->pow(rs->omega(k), 23) == 1);
        CHECK(rs->index_of(rs->omega(k)) == k);
        CHECK(rs->frobenius_map()[k] == (2 * k) % 23);
    }
    CHECK(rs->frobenius_orbit(1) ==
          std::vector<std::uint32_t>{1, 2, 4, 8, 16, 9, 18, 13, 3, 6, 12});
    CHECK(rs->frobenius_orbit(0) == std::vector<std::uint32_t>{0});
    std::uint64_t orbit1 = 0;
    for (auto k : rs->frobenius_orbit(1)) orbit1 |= std::uint64_t{1} << k;
    CHECK(rs->closure(std::uint64_t{1} << 1) == orbit1);
    CHECK(rs->is_closed(orbit1));
    CHECK_FALSE(rs->is_closed((std::uint64_t{1} << 1) | (std::uint64_t{1} << 5)));
}

TEST_CASE("ternary roots of x^20 + 1 index by tripling plus one") {
    auto base = Field::make(3, 1);
    auto rs = RootSystem::build(base, 20, base->from_int(-1));
    CHECK(rs->degree() == 4);
    const auto& F = rs->ext();
    elem_t lam = rs->embed(rs->lambda());
    // alpha^(q-1) = xi: the Frobenius advances the root index affinely
    CHECK(F->pow(rs->alpha(), 3 - 1) == rs->xi());
    for (std::uint32_t k = 0; k < 20; ++k) {
        CHECK(F->pow(rs->omega(k), 20) == lam);
        CHECK(rs->frobenius_map()[k] == (3 * k + 1) % 20);
    }
    CHECK(rs->frobenius_orbit(12) == std::vector<std::uint32_t>{12, 17});
    CHECK(rs->is_closed((std::uint64_t{1} << 12) | (std::uint64_t{1} << 17)));
}

TEST_CASE("ternary roots of x^28 + 1 and x^41 + 1") {
    auto base = Field::make(3, 1);
    auto rs28 = RootSystem::build(base, 28, 2);
    CHECK(rs28->degree() == 6);
    for (std::uint32_t k = 0; k < 28; ++k) {
        CHECK(rs28->frobenius_map()[k] == (3 * k + 1) % 28);
    }
    auto rs41 = RootSystem::build(base, 41, 2);
    CHECK(rs41->degree() == 8);
    for (std::uint32_t k = 0; k < 41; ++k) {
        CHECK(rs41->frobenius_map()[k] == (3 * k + 1) % 41);
    }
}

TEST_CASE("coordinates over the base field reassemble") {
    auto check_coords = [](const RootSystemPtr& rs) {
        const auto& F = rs->ext();
        elem_t xbar = F->from_coeffs(std::vector<std::uint64_t>{0, 1});
        for (elem_t v = 0; v < F->q(); ++v) {
            auto c = rs->coords_over_base(v);
            REQUIRE(c.size() == rs->degree());
            elem_t acc = 0, pw = 1;
            for (std::uint32_t k = 0; k < rs->degree(); ++k) {
                acc = F->add(acc, F->mul(rs->embed(c[k]), pw));
                pw = F->mul(pw, xbar);
            }
            CHECK(acc == v);
        }
    };
    check_coords(RootSystem::build(Field::make(3, 2), 5, 1));  // composite base
    check_coords(RootSystem::build(Field::make(3, 1), 20, 2)); // prime base
}

TEST_CASE("degenerate root systems") {
    auto rs = RootSystem::build(Field::make(2, 1), 1, 1);
    CHECK(rs->degree() == 1);
    CHECK(rs->ext().get() == rs->base().get());
    CHECK(rs->omega() == std::vector<elem_t>{1});
    CHECK(rs->frobenius_map() == std::vector<std::uint32_t>{0});

    auto rs7 = RootSystem::build(Field::make(2, 1), 7, 1);
    CHECK(rs7->degree() == 3);
    CHECK(rs7->ext()->q() == 8);
}
