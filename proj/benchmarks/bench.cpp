#include <benchmark/benchmark.h>

#include "extremal/connectivity.hpp"
#include "extremal/constructions.hpp"
#include "extremal/dicolouring.hpp"
#include "extremal/recognition.hpp"

using namespace extremal;

namespace {

Digraph member(int k, int joins, std::uint64_t seed) {
    return random_member(k, joins, seed).d;
}

void bm_lambda_max(benchmark::State& state) {
    auto d = member(3, static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(lambda_max(d));
    state.SetLabel("n=" + std::to_string(d.order()));
}
BENCHMARK(bm_lambda_max)->Arg(1)->Arg(2)->Arg(3);

void bm_dichromatic(benchmark::State& state) {
    auto d = member(3, static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(dichromatic_number(d));
    state.SetLabel("n=" + std::to_string(d.order()));
}
BENCHMARK(bm_dichromatic)->Arg(1)->Arg(2)->Arg(3);

void bm_recognize(benchmark::State& state) {
    auto d = member(3, static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(recognize_extremal(d, 3));
    state.SetLabel("n=" + std::to_string(d.order()));
}
BENCHMARK(bm_recognize)->Arg(1)->Arg(2)->Arg(3);

void bm_recognize_base(benchmark::State& state) {
    auto d = bidirected_complete(static_cast<int>(state.range(0)) + 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(recognize_extremal(d, static_cast<int>(state.range(0))));
}
BENCHMARK(bm_recognize_base)->Arg(3)->Arg(4)->Arg(5);

} // namespace

BENCHMARK_MAIN();
