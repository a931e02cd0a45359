#include "knotweed/cmoves.hpp"
#include "knotweed/corpus.hpp"
#include "knotweed/invariants.hpp"
#include "knotweed/simplify.hpp"
#include "knotweed/zmoves.hpp"

#include <benchmark/benchmark.h>

using namespace knotweed;

namespace {

const Diagram& scrambled()
{
    static const Diagram d = inverse_move_scramble(
        connected_sum(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"), parse_pd("X[2,7,3,8] X[4,2,5,1] X[6,3,7,4] X[8,6,1,5]")),
        12, 3);
    return d;
}

void canonical(benchmark::State& state)
{
    Diagram d = hass_nowik(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_code(d));
    state.counters["crossings"] = d.crossing_count();
}
BENCHMARK(canonical)->DenseRange(1, 7, 2);

void z_moves(benchmark::State& state)
{
    const Diagram& d = scrambled();
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_z1(d));
        benchmark::DoNotOptimize(find_z2(d));
        benchmark::DoNotOptimize(find_z3(d));
    }
    state.counters["crossings"] = d.crossing_count();
}
BENCHMARK(z_moves);

void c_moves(benchmark::State& state)
{
    const Diagram& d = scrambled();
    for (auto _ : state)
        benchmark::DoNotOptimize(find_c(d, static_cast<int>(state.range(0))));
}
BENCHMARK(c_moves)->Arg(4)->Arg(6)->Arg(8);

void determinant_bench(benchmark::State& state)
{
    Diagram d = hass_nowik(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(determinant(d));
}
BENCHMARK(determinant_bench)->DenseRange(1, 7, 2);

void untangle_hass_nowik(benchmark::State& state)
{
    Diagram d = hass_nowik(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(procedure_p(d));
    state.counters["crossings"] = d.crossing_count();
}
BENCHMARK(untangle_hass_nowik)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
