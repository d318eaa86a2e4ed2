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

#include <benchmark/benchmark.h>

#include "qtspec/bounds.hpp"
#include "qtspec/oracle.hpp"
#include "qtspec/qt_code.hpp"
#include "qtspec/root_system.hpp"
#include "qtspec/spectral.hpp"

namespace {

using namespace qtspec;

/* Binary m = 23: the degree-11 orbit of index 1 generates the perfect
 * [23, 12, 7] cyclic code, a hard instance for the recursive bound. */
struct GolaySetup {
    RootSystemPtr rs;
    DefiningSet zeros;
    QtCode code;

    GolaySetup()
        : rs(RootSystem::build(Field::make(2, 1), 23, 1)),
          zeros{23, rs->closure(std::uint64_t{1} << 1)},
          code(QtCode::from_generators(
              rs->base(), 1, 23, 1,
              {{constacyclic_from_defining_set(*rs, zeros)}})) {}
};

const GolaySetup& golay() {
    static const GolaySetup g;
    return g;
}

/* Ternary m = 13, ell = 3 diagonal module over a dense closed defining
 * set; a mid-size instance for the module-level paths. */
struct ModuleSetup {
    RootSystemPtr rs;
    QtCode code;

    ModuleSetup()
        : rs(RootSystem::build(Field::make(3, 1), 13, 1)), code(make_code(*rs)) {}

    static QtCode make_code(const RootSystem& rs) {
        const Poly g = constacyclic_from_defining_set(
            rs, {13, rs.closure((std::uint64_t{1} << 11) - 2)});
        std::vector<std::vector<Poly>> rows(3,
                                            std::vector<Poly>(3, Poly::zero(rs.base())));
        for (std::uint32_t i = 0; i < 3; ++i) rows[i][i] = g;
        return QtCode::from_generators(rs.base(), rs.lambda(), 13, 3, rows);
    }
};

const ModuleSetup& module3() {
    static const ModuleSetup m;
    return m;
}

void BM_RootSystemBuild(benchmark::State& state) {
    auto f = Field::make(2, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(RootSystem::build(f, 23, 1));
}
BENCHMARK(BM_RootSystemBuild);

void BM_BchBound(benchmark::State& state) {
    const GolaySetup& g = golay();
    for (auto _ : state)
        benchmark::DoNotOptimize(bch_bound(g.zeros, StridePolicy::coprime));
}
BENCHMARK(BM_BchBound);

void BM_HtBound(benchmark::State& state) {
    const GolaySetup& g = golay();
    for (auto _ : state)
        benchmark::DoNotOptimize(ht_bound(g.zeros));
}
BENCHMARK(BM_HtBound);

void BM_RoosBound(benchmark::State& state) {
    const GolaySetup& g = golay();
    for (auto _ : state)
        benchmark::DoNotOptimize(roos_bound(g.zeros));
}
BENCHMARK(BM_RoosBound);

void BM_ShiftBound(benchmark::State& state) {
    const GolaySetup& g = golay();
    for (auto _ : state)
        benchmark::DoNotOptimize(shift_bound(*g.rs, g.zeros));
}
BENCHMARK(BM_ShiftBound);

void BM_SpectralData(benchmark::State& state) {
    const ModuleSetup& m = module3();
    for (auto _ : state)
        benchmark::DoNotOptimize(spectral_data(m.code));
}
BENCHMARK(BM_SpectralData);

void BM_ParityCheck(benchmark::State& state) {
    const ModuleSetup& m = module3();
    for (auto _ : state)
        benchmark::DoNotOptimize(parity_check(m.code));
}
BENCHMARK(BM_ParityCheck);

void BM_MinDistance(benchmark::State& state) {
    const GolaySetup& g = golay();
    const OracleConfig cfg{std::uint64_t{1} << 22};
    for (auto _ : state)
        benchmark::DoNotOptimize(qt_min_distance(g.code, cfg));
}
BENCHMARK(BM_MinDistance);

} // namespace

BENCHMARK_MAIN();
