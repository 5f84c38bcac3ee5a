// Copyright 2026 The cliffdepth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "benchmark/benchmark.h"

#include "cliffdepth/clifford_synth.h"
#include "cliffdepth/cnot_synth.h"
#include "cliffdepth/cz_synth.h"
#include "cliffdepth/depth_bounds.h"
#include "cliffdepth/m01.h"
#include "cliffdepth/random.h"
#include "cliffdepth/rectangle.h"
#include "cliffdepth/tableau.h"

using namespace cliffdepth;

namespace {

std::vector<Qubit> qubit_range(std::size_t from, std::size_t count) {
    std::vector<Qubit> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = static_cast<Qubit>(from + i);
    }
    return out;
}

void bm_rectangle(benchmark::State &state) {
    auto k = static_cast<std::size_t>(state.range(0));
    QubitSet a(qubit_range(0, k));
    QubitSet b(qubit_range(k, k));
    for (auto _ : state) {
        benchmark::DoNotOptimize(synth_rectangle(a, b, 2 * k));
    }
}
BENCHMARK(bm_rectangle)->RangeMultiplier(4)->Range(4, 256);

void bm_m01(benchmark::State &state) {
    auto k = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    auto p = random_matrix(k, k, rng);
    QubitSet a(qubit_range(0, k));
    QubitSet b(qubit_range(k, k));
    for (auto _ : state) {
        benchmark::DoNotOptimize(synth_m01(a, b, p, 2 * k));
    }
}
BENCHMARK(bm_m01)->RangeMultiplier(4)->Range(4, 256);

void bm_synth_cz(benchmark::State &state) {
    Rng rng(2);
    auto spec = random_cz_spec(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) {
        auto c = synth_cz(spec);
        state.counters["depth"] = static_cast<double>(two_qubit_depth(c));
    }
}
BENCHMARK(bm_synth_cz)->RangeMultiplier(2)->Range(16, 1024)->Unit(benchmark::kMillisecond);

void bm_synth_linear(benchmark::State &state) {
    Rng rng(3);
    auto r = random_invertible(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) {
        auto res = synth_linear(r, SynthMode::Exact);
        state.counters["depth"] = static_cast<double>(two_qubit_depth(res.circuit));
    }
}
BENCHMARK(bm_synth_linear)->RangeMultiplier(2)->Range(16, 1024)->Unit(benchmark::kMillisecond);

void bm_synth_clifford(benchmark::State &state) {
    Rng rng(4);
    auto t = random_tableau(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) {
        auto c = synth_clifford(t);
        state.counters["depth"] = static_cast<double>(two_qubit_depth(c));
    }
}
BENCHMARK(bm_synth_clifford)->RangeMultiplier(2)->Range(16, 512)->Unit(benchmark::kMillisecond);

void bm_tableau_of_circuit(benchmark::State &state) {
    auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(5);
    auto c = random_clifford_circuit(n, 10 * n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tableau_of_circuit(c));
    }
}
BENCHMARK(bm_tableau_of_circuit)->RangeMultiplier(4)->Range(16, 1024);

void bm_depth_table(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(DepthTable::fill(Family::Clifford, kMaxTableN));
    }
}
BENCHMARK(bm_depth_table)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
