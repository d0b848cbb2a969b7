#include <benchmark/benchmark.h>

#include <vector>

#include "vtsim/config.hpp"
#include "vtsim/engagement.hpp"
#include "vtsim/kmeans.hpp"
#include "vtsim/maneuver.hpp"
#include "vtsim/predict.hpp"
#include "vtsim/rng.hpp"
#include "vtsim/vehicle.hpp"

namespace {

void bench_step_vehicle(benchmark::State& state) {
    vtsim::VehicleState v;
    v.position = {0.0, 0.0};
    v.velocity = {0.0, 500.0};
    const vtsim::Vec2 cmd{120.0, 40.0};
    for (auto _ : state) {
        v = vtsim::step_vehicle(v, cmd, 0.025);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(bench_step_vehicle);

void bench_rollout_target(benchmark::State& state) {
    vtsim::VehicleState target;
    target.position = {0.0, 60000.0};
    target.velocity = {0.0, -200.0};
    const vtsim::ManeuverModelParams params;
    const std::vector<double> times = vtsim::horizon(0.0, 100.0, 20);
    std::uint64_t s = 0;
    for (auto _ : state) {
        vtsim::Rng rng(vtsim::derive_seed(1234, s++));
        benchmark::DoNotOptimize(
            vtsim::rollout_target(target, params, rng, 0.0, times, 0.025));
    }
}
BENCHMARK(bench_rollout_target);

void bench_ts_kmeans(benchmark::State& state) {
    const int n_samples = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    vtsim::VehicleState target;
    target.position = {0.0, 60000.0};
    target.velocity = {0.0, -200.0};
    const vtsim::ManeuverModelParams params;
    const std::vector<double> times = vtsim::horizon(0.0, 100.0, 20);
    std::vector<vtsim::VehicleState> targets{target};
    vtsim::Rng bundle_rng(42);
    const vtsim::SampleBundle bundle =
        vtsim::sample_bundle(targets, params, n_samples, times, 0.0, 0.025, bundle_rng);
    std::uint64_t s = 0;
    for (auto _ : state) {
        vtsim::Rng rng(vtsim::derive_seed(99, s++));
        benchmark::DoNotOptimize(vtsim::ts_kmeans(bundle.samples, k, rng));
    }
}
BENCHMARK(bench_ts_kmeans)->Args({1000, 4})->Args({1000, 8})->Args({4000, 8});

void bench_run_engagement(benchmark::State& state) {
    vtsim::EngagementConfig config;
    config.m_targets = 2;
    config.n_interceptors = static_cast<int>(state.range(0));
    config.n_s = static_cast<int>(state.range(1));
    config.prediction_method = vtsim::PredictionMethod::VirtualTarget;
    std::uint64_t s = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(vtsim::run_engagement(config, s++));
    }
}
BENCHMARK(bench_run_engagement)->Args({2, 100})->Args({5, 1000})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
