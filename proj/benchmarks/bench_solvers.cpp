/*
 * Copyright 2026 The ssg authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "ssg/enumeration.hpp"
#include "ssg/generate.hpp"
#include "ssg/improvement.hpp"
#include "ssg/qualitative.hpp"
#include "ssg/regions.hpp"

namespace {

/* n total vertices, k random, wide controlled majority; the bench workload. */
ssg::Game make_game(int n, int k, std::uint64_t seed) {
    ssg::GenSpec spec;
    int inner = n - 2;
    spec.random_count = k;
    spec.max_count = (inner - k + 1) / 2;
    spec.min_count = inner - k - spec.max_count;
    spec.out_degree_min = 1;
    spec.out_degree_max = 5;
    spec.max_denominator = 8;
    spec.seed = seed;
    return ssg::generate_game(spec);
}

void BM_attractor(benchmark::State& state) {
    ssg::Game game = make_game(static_cast<int>(state.range(0)), 4, 11);
    std::vector<int> seed{game.target()};
    for (auto _ : state) benchmark::DoNotOptimize(ssg::deterministic_attractor(game, seed));
}
BENCHMARK(BM_attractor)->Arg(100)->Arg(1000)->Arg(10000);

void BM_permutation_values(benchmark::State& state) {
    ssg::Game game = ssg::normalize_game(make_game(static_cast<int>(state.range(0)), 4, 11)).image;
    ssg::Permutation f = ssg::build_live_permutation(game, ssg::Valuation(game.vertex_count()));
    for (auto _ : state) benchmark::DoNotOptimize(ssg::permutation_values(game, f));
}
BENCHMARK(BM_permutation_values)->Arg(100)->Arg(1000);

void BM_enumerate_solve(benchmark::State& state) {
    ssg::Game game = make_game(200, static_cast<int>(state.range(0)), 11);
    for (auto _ : state) benchmark::DoNotOptimize(ssg::enumerate_solve(game));
}
BENCHMARK(BM_enumerate_solve)->DenseRange(2, 6, 2);

void BM_improve_solve(benchmark::State& state) {
    ssg::Game game = make_game(200, static_cast<int>(state.range(0)), 11);
    for (auto _ : state) benchmark::DoNotOptimize(ssg::improve_solve(game));
}
BENCHMARK(BM_improve_solve)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();
