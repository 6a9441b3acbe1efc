// Copyright 2026 The binphase Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against their OpenMP counterparts.
// Run with OMP_NUM_THREADS set to compare thread counts.

#include "binphase/experiments.hpp"
#include "binphase/sampling.hpp"

#include <benchmark/benchmark.h>

using namespace binphase;

namespace {

const InterferometerConfig kConfig{0, 16, kPi / 2.0, 2.0};

void BM_sweep_serial(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(serial::sweep(kConfig, static_cast<std::size_t>(state.range(0))));
    }
}

void BM_sweep_omp(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep(kConfig, static_cast<std::size_t>(state.range(0))));
    }
}

void BM_sample_curve_serial(benchmark::State &state) {
    const ResponseCurve exact = sweep(kConfig, 300);
    const ShotPlan plan{static_cast<std::uint64_t>(state.range(0)), 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(serial::sample_curve(exact, plan));
    }
}

void BM_sample_curve_omp(benchmark::State &state) {
    const ResponseCurve exact = sweep(kConfig, 300);
    const ShotPlan plan{static_cast<std::uint64_t>(state.range(0)), 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_curve(exact, plan));
    }
}

void BM_spectrum_serial(benchmark::State &state) {
    const InterferometerConfig c{0, static_cast<int>(state.range(0)), kPi / 2.0, 2.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(serial::fourier_spectrum(c, default_spectrum_samples(c.depth)));
    }
}

void BM_spectrum_omp(benchmark::State &state) {
    const InterferometerConfig c{0, static_cast<int>(state.range(0)), kPi / 2.0, 2.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(fourier_spectrum(c, default_spectrum_samples(c.depth)));
    }
}

RunConfig scaling_config() {
    RunConfig c;
    c.shots = 0;
    c.trials = 200;
    return c;
}

void BM_scaling_serial(benchmark::State &state) {
    const RunConfig c = scaling_config();
    for (auto _ : state) {
        benchmark::DoNotOptimize(serial::cmd_scaling(c));
    }
}

void BM_scaling_omp(benchmark::State &state) {
    const RunConfig c = scaling_config();
    for (auto _ : state) {
        benchmark::DoNotOptimize(cmd_scaling(c));
    }
}

} // namespace

BENCHMARK(BM_sweep_serial)->Arg(300)->Arg(3000);
BENCHMARK(BM_sweep_omp)->Arg(300)->Arg(3000);
BENCHMARK(BM_sample_curve_serial)->Arg(1000)->Arg(100000);
BENCHMARK(BM_sample_curve_omp)->Arg(1000)->Arg(100000);
BENCHMARK(BM_spectrum_serial)->Arg(16)->Arg(64);
BENCHMARK(BM_spectrum_omp)->Arg(16)->Arg(64);
BENCHMARK(BM_scaling_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scaling_omp)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
