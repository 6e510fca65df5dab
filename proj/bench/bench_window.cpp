// Window fill: serial reference vs OpenMP-parallel. Cell results are cached
// inside DegreewiseIdeal, so each iteration builds a fresh scheme to measure
// the real fill cost.

#include <benchmark/benchmark.h>

#include "fatpoints/kaehler.hpp"
#include "fatpoints/scheme.hpp"

using namespace fatpoints;

namespace {

FatPointScheme subject() { return FatPointScheme::grid_ci(2, 3).equimultiple(2); }

void bench_hf(benchmark::State& state, ExecMode mode) {
    for (auto _ : state) {
        FatPointScheme y = subject();
        benchmark::DoNotOptimize(hf(y, 10, 12, mode).window);
    }
}

void bench_omega(benchmark::State& state, ExecMode mode) {
    for (auto _ : state) {
        FatPointScheme y = subject();
        benchmark::DoNotOptimize(hf_omega(y, 10, 12, mode).window);
    }
}

void hf_serial(benchmark::State& s) { bench_hf(s, ExecMode::serial); }
void hf_parallel(benchmark::State& s) { bench_hf(s, ExecMode::parallel); }
void omega_serial(benchmark::State& s) { bench_omega(s, ExecMode::serial); }
void omega_parallel(benchmark::State& s) { bench_omega(s, ExecMode::parallel); }

BENCHMARK(hf_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(hf_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(omega_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(omega_parallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
