#include "doctest.h"

#include <random>

#include "qtspec/bounds.hpp"
#include "qtspec/oracle.hpp"
#include "qtspec/qt_code.hpp"

using namespace qtspec;

namespace {

DefiningSet set_of(std::uint32_t m, const std::vector<std::uint32_t>& v) {
    return DefiningSet::from_indices(m, v);
}

QtCode diagonal_code(const FieldPtr& f, elem_t lambda, std::uint32_t m, std::uint32_t ell,
                     const Poly& g) {
    std::vector<std::vector<Poly>> rows(ell, std::vector<Poly>(ell, Poly::zero(f)));
    for (std::uint32_t i = 0; i < ell; ++i) rows[i][i] = g;
    return QtCode::from_generators(f, lambda, m, ell, rows);
}

// index 4, m = 23: every block shares the classic perfect binary code
QtCode golay_module() {
    auto f2 = Field::make(2, 1);
    auto rs = RootSystem::build(f2, 23, f2->one());
    const DefiningSet c1 = DefiningSet::from_indices(23, rs->frobenius_orbit(1));
    return diagonal_code(f2, f2->one(), 23, 4, constacyclic_from_defining_set(*rs, c1));
}

// index 4, m = 26 over GF(3), the second worked module
QtCode ternary_module() {
    auto f3 = Field::make(3, 1);
    auto rs = RootSystem::build(f3, 26, f3->one());
    const DefiningSet i_set = set_of(26, {0, 13, 14, 16, 17, 22, 23, 25});
    return diagonal_code(f3, f3->one(), 26, 4, constacyclic_from_defining_set(*rs, i_set));
}

} // namespace

TEST_CASE("consecutive run bound") {
    const DefiningSet l = set_of(8, {0, 1, 2, 4});
    const BchResult r = bch_bound(l);
    CHECK(r.value == 4);
    CHECK(r.run.start == 0);
    CHECK(r.run.count == 3);
    CHECK(replay_bch(r, l));

    const DefiningSet wrap = set_of(8, {6, 7, 0});
    const BchResult w = bch_bound(wrap);
    CHECK(w.value == 4);
    CHECK(w.run.start == 6);
    CHECK(replay_bch(w, wrap));

    CHECK_THROWS_AS(bch_bound(DefiningSet::from_mask(8, 0)), std::invalid_argument);
    CHECK_THROWS_AS(bch_bound(DefiningSet::from_mask(8, 0xFF)), std::invalid_argument);

    // a coprime stride can beat every unit run
    const DefiningSet row6 = set_of(13, {0, 2, 4, 5, 6, 10, 12});
    CHECK(bch_bound(row6, StridePolicy::unit).value == 4);
    const BchResult c = bch_bound(row6, StridePolicy::coprime);
    CHECK(c.value == 5);
    CHECK(replay_bch(c, row6));
}

TEST_CASE("consecutive run bound reproduces the reference table") {
    for (const TableRow& row : table1_rows()) {
        CAPTURE(row.no);
        const DefiningSet ds = DefiningSet::from_indices(row.m, row.defining);
        const BchResult r = bch_bound(ds);
        CHECK(r.value == row.d_bch);
        CHECK(replay_bch(r, ds));
    }
}

TEST_CASE("translate pattern bound reproduces the reference table") {
    for (const TableRow& row : table1_rows()) {
        CAPTURE(row.no);
        const DefiningSet ds = DefiningSet::from_indices(row.m, row.defining);
        const HtResult r = ht_bound(ds);
        CHECK(r.value == row.d_ht);
        CHECK(r.value >= bch_bound(ds).value);
        CHECK(replay_ht(r, ds));
    }
}

TEST_CASE("translate pattern bound with wider first strides") {
    SearchCaps caps;
    caps.ht_general_n1 = true;
    for (std::uint32_t no : {1u, 6u, 7u, 11u}) {
        const TableRow& row = table1_rows()[no - 1];
        const DefiningSet ds = DefiningSet::from_indices(row.m, row.defining);
        const HtResult wide = ht_bound(ds, caps);
        CHECK(wide.value >= ht_bound(ds).value);
        CHECK(replay_ht(wide, ds));
    }
}

TEST_CASE("two set bound") {
    auto f2 = Field::make(2, 1);
    auto rs = RootSystem::build(f2, 23, f2->one());
    const DefiningSet golay = DefiningSet::from_indices(23, rs->frobenius_orbit(1));
    const RoosResult g = roos_bound(golay);
    CHECK(g.value == 5);
    CHECK(replay_roos(g, golay));

    const DefiningSet i_set = set_of(26, {0, 13, 14, 16, 17, 22, 23, 25});
    const RoosResult r = roos_bound(i_set);
    CHECK(r.value == 6);
    CHECK(r.d_n == 3);
    CHECK(r.m_set.size() == 4);
    CHECK(r.mprime.count == 5);
    CHECK(r.mprime.count <= r.m_set.size() + r.d_n - 2);
    CHECK(replay_roos(r, i_set));

    RoosResult bad = r;
    bad.value += 1;
    CHECK_FALSE(replay_roos(bad, i_set));

    // the two-set search always contains the best run as a one-point window
    for (const TableRow& row : table1_rows()) {
        if (row.m > 30) continue;
        CAPTURE(row.no);
        const DefiningSet ds = DefiningSet::from_indices(row.m, row.defining);
        const RoosResult t = roos_bound(ds);
        CHECK(t.value >= bch_bound(ds, StridePolicy::coprime).value);
        CHECK(replay_roos(t, ds));
    }
}

TEST_CASE("independent set bound") {
    auto f2 = Field::make(2, 1);
    auto rs = RootSystem::build(f2, 23, f2->one());
    const DefiningSet golay = DefiningSet::from_indices(23, rs->frobenius_orbit(1));

    const ShiftResult g = shift_bound(*rs, golay);
    CHECK(g.value == 7);
    CHECK(g.s_min == golay);
    CHECK(g.steps.size() == 6);
    CHECK(g.a_set.size() == 6);
    CHECK(g.parity_bump);
    CHECK(replay_shift(g, *rs, golay));

    ShiftResult bad = g;
    bad.steps.back().added = (bad.steps.back().added + 1) % 23;
    CHECK_FALSE(replay_shift(bad, *rs, golay));

    ShiftResult flat = g;
    flat.parity_bump = false;
    CHECK_FALSE(replay_shift(flat, *rs, golay));

    auto f3 = Field::make(3, 1);
    auto rs26 = RootSystem::build(f3, 26, f3->one());
    const DefiningSet i_set = set_of(26, {0, 13, 14, 16, 17, 22, 23, 25});
    const ShiftResult r = shift_bound(*rs26, i_set);
    CHECK(r.value == 5);
    CHECK_FALSE(r.parity_bump);
    CHECK(replay_shift(r, *rs26, i_set));

    auto rs7 = RootSystem::build(f2, 7, f2->one());
    const DefiningSet hamming = set_of(7, {1, 2, 4});
    const ShiftResult h = shift_bound(*rs7, hamming);
    CHECK(h.value == 3);
    CHECK(replay_shift(h, *rs7, hamming));

    CHECK_THROWS_AS(shift_bound(*rs, set_of(23, {1})), std::invalid_argument);
    SearchCaps tiny;
    tiny.shift_state_cap = 2;
    CHECK_THROWS_AS(shift_bound(*rs, golay, tiny), std::runtime_error);
}

TEST_CASE("spectral bounds on the binary worked module") {
    const QtCode code = golay_module();
    CHECK(code.dimension() == 48);

    const SpectralData sd = spectral_data(code);
    const DefiningSet omega_bar{23, sd.omega_bar_mask};
    CHECK(omega_bar == set_of(23, {1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18}));
    for (const EigenvalueInfo& ev : sd.eigenvalues) {
        CHECK(ev.multiplicity == 4);
        CHECK(ev.eigenspace.rows() == 4);
    }
    CHECK(eigencode(code, common_eigenspace(code, omega_bar.indices())).distance ==
          Distance::infinity());

    for (const auto& [source, expected] :
         std::vector<std::pair<DpSource, std::uint64_t>>{{DpSource::bch, 5},
                                                         {DpSource::ht, 5},
                                                         {DpSource::roos, 5},
                                                         {DpSource::shift, 7},
                                                         {DpSource::oracle, 7}}) {
        const SpectralResult r = spectral_bound(code, omega_bar, source);
        CHECK(r.value == expected);
        CHECK(r.d_p == expected);
        CHECK(r.p_closed == omega_bar);
        CHECK_FALSE(r.eigen_distance.is_finite());
    }

    const SpectralShiftResult sh = spectral_shift(code);
    CHECK(sh.value == 7);
    CHECK(sh.independent_value == 7);
    CHECK(sh.parity_bump);
    CHECK(sh.steps.size() == 6);
    CHECK_FALSE(sh.eigen_distance.is_finite());
    CHECK(replay_shift(
        ShiftResult{sh.independent_value, sh.s_min, sh.steps, sh.a_set, sh.parity_bump},
        *code.roots(), sh.t_set));

    const SpectralRoosResult ro = spectral_roos(code);
    CHECK(ro.value == 5);
    CHECK_FALSE(ro.eigen_distance.is_finite());
    CHECK(replay_roos(RoosResult{ro.value, ro.n, ro.mprime, ro.m_set, ro.d_n}, omega_bar));

    CHECK(qt_bch_bound(code).value == 5);
    CHECK(qt_ht_bound(code).value == 5);

    CHECK_THROWS_AS(spectral_bound(code, DefiningSet::from_mask(23, 0), DpSource::bch),
                    std::invalid_argument);
    CHECK_THROWS_AS(spectral_bound(code, set_of(23, {0}), DpSource::bch),
                    std::invalid_argument);
}

TEST_CASE("spectral bounds on the ternary worked module") {
    const QtCode code = ternary_module();
    const SpectralData sd = spectral_data(code);
    const DefiningSet omega_bar{26, sd.omega_bar_mask};
    CHECK(omega_bar == set_of(26, {0, 13, 14, 16, 17, 22, 23, 25}));

    const SpectralRoosResult ro = spectral_roos(code);
    CHECK(ro.value == 6);
    CHECK(ro.d_n == 3);
    CHECK(ro.m_set.size() == 4);
    CHECK(ro.mprime.count == 5);
    CHECK(ro.mprime.count <= ro.m_set.size() + ro.d_n - 2);
    CHECK_FALSE(ro.eigen_distance.is_finite());
    CHECK(replay_roos(RoosResult{ro.value, ro.n, ro.mprime, ro.m_set, ro.d_n}, omega_bar));

    const SpectralShiftResult sh = spectral_shift(code);
    CHECK(sh.value == 5);
    CHECK_FALSE(sh.parity_bump);
    CHECK(replay_shift(
        ShiftResult{sh.independent_value, sh.s_min, sh.steps, sh.a_set, sh.parity_bump},
        *code.roots(), sh.t_set));

    const SpectralResult sp =
        spectral_bound(code, omega_bar, DpSource::oracle, {}, OracleConfig{std::uint64_t{1} << 30});
    CHECK(sp.value == 6);
    CHECK(sp.d_p == 6);
    CHECK_FALSE(sp.eigen_distance.is_finite());
}

TEST_CASE("eigencode distance clamps the rank candidates") {
    auto f2 = Field::make(2, 1);
    const Poly x_minus_1(f2, {f2->one(), f2->one()});
    const std::vector<std::vector<Poly>> rows = {
        {x_minus_1, Poly::one(f2)},
        {Poly::zero(f2), Poly::one(f2)},
    };
    const QtCode code = QtCode::from_generators(f2, f2->one(), 5, 2, rows);
    const SpectralData sd = spectral_data(code);
    REQUIRE(sd.omega_bar_mask == 1); // only the root at index 0 survives

    const QtBchResult b = qt_bch_bound(code);
    CHECK(b.value == 1);
    CHECK(b.eigen_distance == Distance::finite(1));
    CHECK(qt_min_distance(code) == 1);

    const QtHtResult h = qt_ht_bound(code);
    CHECK(h.value == 1);
}

TEST_CASE("all bounds stay below the enumerated distance") {
    std::mt19937_64 rng(260823);
    auto f2 = Field::make(2, 1);
    auto f3 = Field::make(3, 1);
    int checked = 0;
    const std::vector<std::tuple<FieldPtr, std::int64_t, std::uint32_t, std::uint32_t>> shapes =
        {{f2, 1, 7, 2},  {f2, 1, 9, 2},  {f2, 1, 5, 3},  {f3, 1, 8, 2},
         {f3, -1, 8, 2}, {f3, -1, 10, 2}, {f3, 1, 7, 3},  {f3, -1, 4, 3}};
    for (const auto& [f, lam_i, m, ell] : shapes) {
        const elem_t lam = f->from_int(lam_i);
        for (int trial = 0; trial < 9; ++trial) {
            std::vector<std::vector<Poly>> gens(ell, std::vector<Poly>(ell, Poly::zero(f)));
            for (std::uint32_t i = 0; i < ell; ++i)
                for (std::uint32_t j = 0; j < ell; ++j) {
                    std::vector<elem_t> cs(1 + rng() % m);
                    for (elem_t& c : cs) c = static_cast<elem_t>(rng() % f->q());
                    gens[i][j] = Poly(f, cs);
                }
            const QtCode code = QtCode::from_generators(f, lam, m, ell, gens);
            const SpectralData sd = spectral_data(code);
            const std::uint64_t universe = DefiningSet{m, 0}.universe();
            if (sd.omega_bar_mask == 0 || sd.omega_bar_mask == universe) continue;

            const OracleConfig budget{std::uint64_t{1} << 28};
            std::uint64_t work = 1;
            bool feasible = true;
            for (std::uint64_t i = 0; i < code.dimension() && feasible; ++i) {
                if (work > budget.max_work / f->q()) feasible = false;
                else work *= f->q();
            }
            if (!feasible) continue;

            const std::uint64_t d = qt_min_distance(code, budget);
            CAPTURE(m);
            CAPTURE(ell);
            CAPTURE(trial);
            CHECK(qt_bch_bound(code).value <= d);
            CHECK(qt_bch_bound(code, StridePolicy::coprime).value <= d);
            CHECK(qt_ht_bound(code).value <= d);
            CHECK(spectral_roos(code).value <= d);
            CHECK(spectral_shift(code).value <= d);
            const DefiningSet omega_bar{m, sd.omega_bar_mask};
            for (DpSource src : {DpSource::bch, DpSource::ht, DpSource::roos, DpSource::shift,
                                 DpSource::oracle})
                CHECK(spectral_bound(code, omega_bar, src, {}, budget).value <= d);
            ++checked;
        }
    }
    CHECK(checked >= 15);
}

TEST_CASE("spectral bounds reject codes without a proper eigenvalue set") {
    auto f3 = Field::make(3, 1);
    const elem_t two = f3->from_int(2);
    const QtCode zero = QtCode::from_generators(f3, two, 4, 2, {});
    CHECK_THROWS_AS(spectral_roos(zero), std::invalid_argument);
    CHECK_THROWS_AS(spectral_shift(zero), std::invalid_argument);

    const std::vector<std::vector<Poly>> unit_rows = {
        {Poly::one(f3), Poly::zero(f3)},
        {Poly::zero(f3), Poly::one(f3)},
    };
    const QtCode full = QtCode::from_generators(f3, two, 4, 2, unit_rows);
    CHECK_THROWS_AS(spectral_roos(full), std::invalid_argument);
    CHECK_THROWS_AS(spectral_shift(full), std::invalid_argument);
    CHECK_THROWS_AS(qt_bch_bound(full), std::invalid_argument);
}
