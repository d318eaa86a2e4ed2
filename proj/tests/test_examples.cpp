#include <doctest.h>

#include "qtspec/examples.hpp"

using namespace qtspec;

namespace {

const ExampleCheck* find_check(const ExampleReport& rep, const std::string& name) {
    for (const ExampleCheck& c : rep.checks)
        if (c.name == name) return &c;
    return nullptr;
}

// the ternary block oracle enumerates 3^18 words, so run the pipeline once
const ExamplesReport& shared_report() {
    static const ExamplesReport r = run_examples();
    return r;
}

} // namespace

TEST_CASE("worked modules reproduce every expected number") {
    const ExamplesReport& report = shared_report();
    REQUIRE(report.examples.size() == 2);
    CHECK(report.pass);

    const ExampleReport& bin = report.examples[0];
    CHECK(bin.q == 2);
    CHECK(bin.m == 23);
    CHECK(bin.ell == 4);
    CHECK(bin.dimension == 48);
    CHECK(bin.shift.value == 7);
    CHECK(bin.shift.parity_bump);
    CHECK(bin.roos.value == 5);
    CHECK(bin.bch.value == 5);
    CHECK(bin.oracle_distance == 7);
    CHECK_FALSE(bin.eigen_distance.is_finite());
    CHECK(bin.spectral_value == 7);
    CHECK(bin.pass);
    for (const ExampleCheck& c : bin.checks) {
        CAPTURE(c.name);
        CHECK(c.pass);
        CHECK(c.expected == c.actual);
    }
    REQUIRE(find_check(bin, "eigenvalue-set") != nullptr);
    CHECK(find_check(bin, "eigenvalue-set")->actual == "1,2,3,4,6,8,9,12,13,16,18");

    const ExampleReport& ter = report.examples[1];
    CHECK(ter.q == 3);
    CHECK(ter.m == 26);
    CHECK(ter.dimension == 72);
    CHECK(ter.roos.value == 6);
    CHECK(ter.roos.d_n == 3);
    CHECK(ter.roos.m_set.size() == 4);
    CHECK(ter.roos.mprime.count == 5);
    CHECK(ter.shift.value == 5);
    CHECK(ter.oracle_distance == 6);
    CHECK(ter.spectral_value == 6);
    CHECK(ter.pass);
    for (const ExampleCheck& c : ter.checks) {
        CAPTURE(c.name);
        CHECK(c.pass);
    }
    REQUIRE(find_check(ter, "eigenvalue-set") != nullptr);
    CHECK(find_check(ter, "eigenvalue-set")->actual == "0,13,14,16,17,22,23,25");
}

TEST_CASE("witnesses inside the report replay") {
    for (const ExampleReport& rep : shared_report().examples) {
        auto f = Field::make(rep.q == 2 ? 2 : 3, 1);
        auto rs = RootSystem::build(f, rep.m, f->one());
        CHECK(replay_shift(rep.shift, *rs, rep.omega_bar));
        CHECK(replay_roos(rep.roos, rep.omega_bar));
        CHECK(replay_bch(rep.bch, rep.omega_bar));
    }
}
