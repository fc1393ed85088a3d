#include <benchmark/benchmark.h>

#include "qopamp/noise_analysis.hpp"

namespace {

qopamp::DeviceParams bench_device() {
    qopamp::DeviceParams p;
    p.R_f = 1e5;
    p.reactance = {qopamp::ReactanceKind::capacitive, 1e-9};
    p.env.set(qopamp::PortId::noise_a, 4.0).set(qopamp::PortId::noise_b, 4.0);
    return p;
}

void BM_ScatteringTranscribed(benchmark::State& state) {
    const auto p = bench_device();
    for (auto _ : state) benchmark::DoNotOptimize(qopamp::scattering_transcribed(p, 1e6));
}
BENCHMARK(BM_ScatteringTranscribed);

void BM_ScatteringSolved(benchmark::State& state) {
    const auto p = bench_device();
    for (auto _ : state) benchmark::DoNotOptimize(qopamp::scattering_solved(p, 1e6));
}
BENCHMARK(BM_ScatteringSolved);

void BM_AddedNoise(benchmark::State& state) {
    const auto p = bench_device();
    for (auto _ : state) benchmark::DoNotOptimize(qopamp::added_noise(p, 1e6));
}
BENCHMARK(BM_AddedNoise);

void BM_AddedNoiseFromModes(benchmark::State& state) {
    const auto p = bench_device();
    for (auto _ : state) benchmark::DoNotOptimize(qopamp::added_noise_from_modes(p, 1e6));
}
BENCHMARK(BM_AddedNoiseFromModes);

void BM_Sweep(benchmark::State& state) {
    const auto p = bench_device();
    const qopamp::SweepSpec spec{1e2, 1e9, static_cast<int>(state.range(0)), qopamp::Spacing::logarithmic};
    for (auto _ : state) benchmark::DoNotOptimize(qopamp::sweep(p, spec));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sweep)->Range(8, 4096);

void BM_MinimizeMatching(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(qopamp::minimize_matching(40.0, 0.5));
}
BENCHMARK(BM_MinimizeMatching);

}  // namespace
BENCHMARK_MAIN();
