#include <benchmark/benchmark.h>

#include "swr/criteria.hpp"
#include "swr/ordered.hpp"

using namespace swr;

namespace {

World witness_w() {
    Population p({{"A", Cardinal::omega()}, {"rest", Cardinal::omega()}});
    return World(p, {{"A", Rational(2)}, {"rest", Rational(0)}});
}

World witness_v() {
    Population p({{"A", Cardinal::omega()}, {"rest", Cardinal::omega()}});
    return World(p, {{"A", Rational(0)}, {"rest", Rational(1)}});
}

World geometric_world(int terms) {
    Population p({{"X", Cardinal::omega()}});
    TailDescriptor t;
    for (int i = 1; i <= terms; ++i)
        t.geometric.push_back({Rational(i % 5 - 2), Rational(1, i + 1)});
    return World(p, {{"X", t}});
}

void bench_compare_sp_plain(benchmark::State& state) {
    World w = witness_w(), v = witness_v();
    for (auto _ : state)
        benchmark::DoNotOptimize(compare_sp(w, v));
}
BENCHMARK(bench_compare_sp_plain);

void bench_compare_spd(benchmark::State& state) {
    World w = witness_w(), v = witness_v();
    for (auto _ : state)
        benchmark::DoNotOptimize(compare_spd(w, v));
}
BENCHMARK(bench_compare_spd);

void bench_tail_analysis(benchmark::State& state) {
    World w = geometric_world(static_cast<int>(state.range(0)));
    World z = World(w.population(), {{"X", Rational(0)}});
    for (auto _ : state)
        benchmark::DoNotOptimize(compare_sp(w, z));
}
BENCHMARK(bench_tail_analysis)->Arg(1)->Arg(4)->Arg(8);

void bench_ot_compare(benchmark::State& state) {
    PeriodicStream w{{Rational(3)}, {Rational(1), Rational(0), Rational(2)}};
    PeriodicStream v{{}, {Rational(0), Rational(1), Rational(1), Rational(1)}};
    for (auto _ : state)
        benchmark::DoNotOptimize(ot_compare(w, v));
}
BENCHMARK(bench_ot_compare);

} // namespace

BENCHMARK_MAIN();
