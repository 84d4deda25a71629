#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "slideocam/slideocam.hpp"

namespace {

using namespace slideocam;

const DesignParams compromise{.eta = 0.37, .a4 = 9.0, .a5 = 2.5, .cams = 3};

void BM_ExtendedAngle(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(extended_angle(compromise));
}
BENCHMARK(BM_ExtendedAngle);

void BM_SampleProfile1024(benchmark::State& state) {
    for (auto _ : state) {
        CamProfile profile = sample_profile(compromise, 1024);
        benchmark::DoNotOptimize(profile.samples.data());
    }
}
BENCHMARK(BM_SampleProfile1024);

void BM_KappaPitchGrid(benchmark::State& state) {
    constexpr int n = 10000;
    for (auto _ : state) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            const double psi = 2.0 * std::numbers::pi * i / (n - 1);
            acc += kappa_pitch(psi, 0.37, 50.0);
        }
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_KappaPitchGrid);

void BM_SweepElevenRows(benchmark::State& state) {
    const DesignParams base{.cams = 2};
    const std::vector<double> etas{0.69, 0.5, 0.4, 0.39, 0.38, 0.37,
                                   0.36, 0.35, 0.34, 0.33, 1.0 / std::numbers::pi};
    for (auto _ : state) {
        SweepTable table = sweep(base, etas);
        benchmark::DoNotOptimize(table.rows.data());
    }
}
BENCHMARK(BM_SweepElevenRows);

void BM_MinimizeZ(benchmark::State& state) {
    const DesignParams base{.cams = 2};
    for (auto _ : state) {
        Optimum optimum = minimize_z(base, 1.0 / std::numbers::pi, 0.8);
        benchmark::DoNotOptimize(optimum.z);
    }
}
BENCHMARK(BM_MinimizeZ);

} // namespace

BENCHMARK_MAIN();
