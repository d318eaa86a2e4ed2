#include <doctest.h>

#include "report_json.hpp"

#include "qtspec/root_system.hpp"

using namespace qtspec;
using nlohmann::json;

namespace {

const RootSystem& golay_roots() {
    static RootSystemPtr rs = RootSystem::build(Field::make(2, 1), 23, 1);
    return *rs;
}

DefiningSet golay_set() {
    return DefiningSet::from_indices(23, golay_roots().frobenius_orbit(1));
}

} // namespace

TEST_CASE("defining sets and distances round-trip through json") {
    const DefiningSet s = golay_set();
    const json j = report::js(s);
    CHECK(report::defining_set_from(json::parse(j.dump())) == s);

    CHECK(report::js(Distance::infinity()) == json("inf"));
    CHECK(report::js(Distance::finite(7)) == json(7));
}

TEST_CASE("replayable witnesses survive a json round-trip") {
    const DefiningSet l = golay_set();

    const BchResult b = bch_bound(l);
    const BchResult b2 = report::bch_from(json::parse(report::js(b).dump()));
    CHECK(b2.value == b.value);
    CHECK(replay_bch(b2, l));

    const HtResult h = ht_bound(l);
    const HtResult h2 = report::ht_from(json::parse(report::js(h).dump()));
    CHECK(h2.value == h.value);
    CHECK(replay_ht(h2, l));

    const RoosResult r = roos_bound(l);
    const RoosResult r2 = report::roos_from(json::parse(report::js(r).dump()));
    CHECK(r2.value == r.value);
    CHECK(replay_roos(r2, l));

    const ShiftResult s = shift_bound(golay_roots(), l);
    const ShiftResult s2 = report::shift_from(json::parse(report::js(s).dump()));
    CHECK(s2.value == s.value);
    CHECK(s2.parity_bump == s.parity_bump);
    CHECK(s2.steps.size() == s.steps.size());
    CHECK(replay_shift(s2, golay_roots(), l));
}

TEST_CASE("tampered parsed witnesses fail replay") {
    const DefiningSet l = golay_set();

    json j = report::js(shift_bound(golay_roots(), l));
    j["value"] = j["value"].get<std::uint64_t>() + 1;
    CHECK_FALSE(replay_shift(report::shift_from(j), golay_roots(), l));

    json rj = report::js(roos_bound(l));
    rj["d_n"] = rj["d_n"].get<std::uint32_t>() + 1;
    CHECK_FALSE(replay_roos(report::roos_from(rj), l));
}

TEST_CASE("report json carries the full examples payload") {
    const ExampleCheck check{"independent-set", "7", "7", true};
    const json j = report::js(check);
    CHECK(j.at("name") == "independent-set");
    CHECK(j.at("pass") == true);
}
