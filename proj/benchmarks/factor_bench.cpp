// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The fejer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include "fejer/factorizer.hpp"
#include "fejer/laurent.hpp"
#include "fejer/testgen.hpp"

namespace {

void BM_SampleOnGrid(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const int m = static_cast<int>(state.range(1));
    auto bundle = fejer::generate_instance(r, m, 1, 0.2);
    const int K = fejer::default_grid_size(m) * 4;
    for (auto _ : state) benchmark::DoNotOptimize(fejer::sample_on_grid(bundle.spectrum, K));
}
BENCHMARK(BM_SampleOnGrid)->Args({2, 4})->Args({4, 8});

void BM_Bauer(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const int m = static_cast<int>(state.range(1));
    auto bundle = fejer::generate_instance(r, m, 2, 0.2);
    fejer::FactorizationOptions opts;
    fejer::IterationStats stats;
    for (auto _ : state) benchmark::DoNotOptimize(fejer::bauer_factor(bundle.spectrum, opts, &stats));
    state.counters["blocks"] = stats.iterations;
}
BENCHMARK(BM_Bauer)->Args({1, 2})->Args({2, 4})->Args({4, 8})->Unit(benchmark::kMillisecond);

void BM_Wilson(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const int m = static_cast<int>(state.range(1));
    auto bundle = fejer::generate_instance(r, m, 2, 0.2);
    fejer::FactorizationOptions opts;
    fejer::IterationStats stats;
    for (auto _ : state) benchmark::DoNotOptimize(fejer::wilson_factor(bundle.spectrum, opts, &stats));
    state.counters["iterations"] = stats.iterations;
}
BENCHMARK(BM_Wilson)->Args({1, 2})->Args({2, 4})->Args({4, 8})->Unit(benchmark::kMillisecond);

void BM_ScalarRoots(benchmark::State& state) {
    auto bundle = fejer::generate_instance(1, static_cast<int>(state.range(0)), 3, 0.2);
    fejer::FactorizationOptions opts;
    for (auto _ : state) benchmark::DoNotOptimize(fejer::scalar_root_factor(bundle.spectrum, opts));
}
BENCHMARK(BM_ScalarRoots)->Arg(2)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
