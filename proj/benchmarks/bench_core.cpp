#include <benchmark/benchmark.h>

#include "dqd/physics.hpp"
#include "dqd/sampling.hpp"
#include "dqd/stats.hpp"

namespace {

dqd::DeviceParams device() {
    dqd::DeviceParams d;
    d.gamma_ev = 1.0;
    d.t1_s = 1e-9;
    return d;
}

void BM_GroundState(benchmark::State& state) {
    double delta = -10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dqd::ground_state(1.0, delta));
        delta = delta < 10.0 ? delta + 1e-3 : -10.0;
    }
}
BENCHMARK(BM_GroundState);

void BM_DetuningForMean(benchmark::State& state) {
    double m = 0.01;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dqd::detuning_for_mean(1.0, m));
        m = m < 0.99 ? m + 1e-4 : 0.01;
    }
}
BENCHMARK(BM_DetuningForMean);

void BM_GenerateStream(benchmark::State& state) {
    const auto dev = device();
    const auto timing = dqd::default_timing(dev, static_cast<std::uint64_t>(state.range(0)));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dqd::generate_stream(dev, 0.3, timing, seed++, true));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GenerateStream)->Arg(1 << 10)->Arg(1 << 16)->Arg(1 << 20);

void BM_GenerateStreamNonIdeal(benchmark::State& state) {
    const auto dev = device();
    dqd::TimingConfig t;
    t.measure_time_tm_s = dev.t1_s / 10.0;
    t.bit_time_tb_s = t.measure_time_tm_s + dev.t1_s;
    t.num_bits_n = static_cast<std::uint64_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dqd::generate_stream(dev, 0.0, t, seed++, false));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GenerateStreamNonIdeal)->Arg(1 << 16);

void BM_Analyze(benchmark::State& state) {
    const auto dev = device();
    const auto stream = dqd::generate_stream(
        dev, 0.0, dqd::default_timing(dev, static_cast<std::uint64_t>(state.range(0))),
        7, true);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dqd::analyze(stream.bits, 10));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Analyze)->Arg(1 << 16)->Arg(1 << 20);

}  // namespace

BENCHMARK_MAIN();
