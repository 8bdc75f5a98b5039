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

#include "ssg/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssg/rational.hpp"

namespace ssg {

namespace {

/* eng() % bound keeps generation identical across standard libraries. */
class Dice {
  public:
    explicit Dice(std::uint64_t seed) : eng_(seed) {}

    long pick(long bound) { return static_cast<long>(eng_() % static_cast<std::uint64_t>(bound)); }

  private:
    std::mt19937_64 eng_;
};

/* First d entries of a partial shuffle; the pool is consumed in place. */
template <typename T>
std::vector<T> draw_distinct(std::vector<T>& pool, int d, Dice& dice) {
    for (int j = 0; j < d; ++j) {
        long r = j + dice.pick(static_cast<long>(pool.size()) - j);
        std::swap(pool[j], pool[r]);
    }
    return std::vector<T>(pool.begin(), pool.begin() + d);
}

/* q split into d positive parts by d-1 distinct cuts inside [1, q-1]. */
std::vector<long> composition(long q, int d, Dice& dice) {
    std::vector<long> cuts(q - 1);
    std::iota(cuts.begin(), cuts.end(), 1L);
    std::vector<long> chosen = draw_distinct(cuts, d - 1, dice);
    std::sort(chosen.begin(), chosen.end());
    std::vector<long> parts;
    long prev = 0;
    for (long c : chosen) {
        parts.push_back(c - prev);
        prev = c;
    }
    parts.push_back(q - prev);
    return parts;
}

}  // namespace

Game generate_game(const GenSpec& spec) {
    if (spec.max_count < 0 || spec.min_count < 0 || spec.random_count < 0)
        throw std::invalid_argument("vertex counts must be non-negative");
    if (spec.out_degree_min < 1 || spec.out_degree_min > spec.out_degree_max)
        throw std::invalid_argument("out-degree range is empty");
    int inner = spec.max_count + spec.min_count + spec.random_count;
    int n = inner + 2;
    if (spec.out_degree_max > n - 1)
        throw std::invalid_argument("out-degree range exceeds the vertex count");
    if (spec.random_count > 0 && spec.out_degree_max > spec.max_denominator)
        throw std::invalid_argument("out-degree range exceeds the denominator bound");

    Dice dice(spec.seed);
    GameBuilder builder;
    for (int i = 0; i < spec.max_count; ++i)
        builder.add_vertex("m" + std::to_string(i), VertexKind::Max);
    for (int i = 0; i < spec.min_count; ++i)
        builder.add_vertex("u" + std::to_string(i), VertexKind::Min);
    for (int i = 0; i < spec.random_count; ++i)
        builder.add_vertex("r" + std::to_string(i), VertexKind::Random);
    int target = builder.add_vertex("T", VertexKind::Target);
    int sink = builder.add_vertex("B", VertexKind::Sink);
    int first_random = spec.max_count + spec.min_count;

    /*
     * Wiring stays in local lists until the end so the target fallback can
     * still retarget one edge. Distinct successors exclude the origin.
     */
    std::vector<std::vector<int>> succ(inner);
    std::vector<std::vector<long>> parts(inner);
    bool target_wired = false;
    for (int v = 0; v < inner; ++v) {
        int d = spec.out_degree_min +
                static_cast<int>(dice.pick(spec.out_degree_max - spec.out_degree_min + 1));
        std::vector<int> pool;
        pool.reserve(n - 1);
        for (int w = 0; w < n; ++w)
            if (w != v) pool.push_back(w);
        succ[v] = draw_distinct(pool, d, dice);
        if (dice.pick(100) < spec.terminal_edge_percent) {
            int terminal = dice.pick(2) == 0 ? target : sink;
            if (std::find(succ[v].begin(), succ[v].end(), terminal) == succ[v].end())
                succ[v].back() = terminal;
        }
        if (v >= first_random) {
            long q = d + dice.pick(spec.max_denominator - d + 1);
            parts[v] = composition(q, d, dice);
        }
        for (int w : succ[v]) target_wired = target_wired || w == target;
    }
    if (!target_wired && inner > 0) {
        /* No duplicate can appear: no list holds the target at this point. */
        int v = spec.random_count > 0 ? first_random : 0;
        succ[v].back() = target;
    }

    for (int v = 0; v < inner; ++v) {
        if (v >= first_random) {
            long q = std::accumulate(parts[v].begin(), parts[v].end(), 0L);
            for (std::size_t i = 0; i < succ[v].size(); ++i)
                builder.add_edge(v, succ[v][i], rational(parts[v][i], q));
        } else {
            for (int w : succ[v]) builder.add_edge(v, w);
        }
    }
    Game game = builder.build();
    require_valid(game);
    return game;
}

}  // namespace ssg
