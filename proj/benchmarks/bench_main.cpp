// Copyright 2026 The dgrading Authors
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

#include <random>

#include <benchmark/benchmark.h>

#include "dgrading/dynamics.hpp"

using namespace dgrading;

namespace {

WeylMonomial random_monomial(int d, int len, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> lab(0, d - 1);
    WeylMonomial m(d);
    for (int x = 0; x < len; ++x) m = m * WeylMonomial::single(d, x, lab(rng), lab(rng));
    return m;
}

void BM_MonoMul(benchmark::State& state) {
    const int len = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    const auto a = random_monomial(3, len, rng);
    const auto b = random_monomial(3, len, rng);
    for (auto _ : state) benchmark::DoNotOptimize(mono_mul(a, b));
}
BENCHMARK(BM_MonoMul)->Arg(4)->Arg(16)->Arg(64);

void BM_Realize(benchmark::State& state) {
    const int len = static_cast<int>(state.range(0));
    const ChainSpec chain(3, len);
    std::mt19937_64 rng(2);
    const auto m = random_monomial(3, len, rng);
    for (auto _ : state) benchmark::DoNotOptimize(realize(m, chain));
}
BENCHMARK(BM_Realize)->DenseRange(3, 7, 2)->Unit(benchmark::kMicrosecond);

void BM_OneParticleEvolve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto f = OneParticleVector::delta(3, n, 0, 1);
    const Hopping h = Hopping::nearest_neighbor({0.5, 0.1});
    for (auto _ : state) benchmark::DoNotOptimize(evolve(f, h, 10.0));
}
BENCHMARK(BM_OneParticleEvolve)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMicrosecond);

void BM_Heisenberg(benchmark::State& state) {
    const int len = static_cast<int>(state.range(0));
    const GradingParams p(2, 1, 0);
    const ChainSpec chain(2, len);
    const QuadraticModel model(Hopping::nearest_neighbor({0.0, 0.5}), p, chain);
    model.spectrum();
    const AlgebraElement a(dressed_weyl(len / 2, 1, p, chain));
    for (auto _ : state) benchmark::DoNotOptimize(heisenberg_evolve(a, model, 0.7));
}
BENCHMARK(BM_Heisenberg)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
