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

#include "ssg/regions.hpp"

#include <cassert>
#include <stdexcept>

namespace ssg {

AttractorResult deterministic_attractor(const Game& game, std::span<const int> seed) {
    int n = game.vertex_count();
    AttractorResult result;
    result.inside.assign(n, false);
    result.level.assign(n, -1);
    result.attracting.assign(n, -1);
    result.trapping.assign(n, -1);

    // A Max vertex needs one successor inside, a Min vertex all of them.
    std::vector<int> pending(n, 0);
    for (int v = 0; v < n; ++v) {
        if (game.kind(v) == VertexKind::Max)
            pending[v] = 1;
        else if (game.kind(v) == VertexKind::Min)
            pending[v] = game.out_degree(v);
    }

    std::vector<int> queue;
    queue.reserve(n);
    for (int v : seed) {
        if (result.inside[v]) continue;
        result.inside[v] = true;
        result.level[v] = 0;
        queue.push_back(v);
    }

    // Levels come out nondecreasing along the queue, so a Min vertex joins
    // one past its slowest successor and a Max vertex one past its fastest.
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int w = queue[head];
        for (int v : game.predecessors(w)) {
            if (result.inside[v] || !game.is_controlled(v)) continue;
            if (--pending[v] > 0) continue;
            result.inside[v] = true;
            result.level[v] = result.level[w] + 1;
            queue.push_back(v);
        }
    }

    for (int v = 0; v < n; ++v) {
        if (game.kind(v) == VertexKind::Max && result.inside[v] && result.level[v] >= 1) {
            for (int w : game.successors(v)) {
                if (result.inside[w] && result.level[w] < result.level[v]) {
                    result.attracting[v] = w;
                    break;
                }
            }
            assert(result.attracting[v] != -1);
        } else if (game.kind(v) == VertexKind::Min && !result.inside[v]) {
            for (int w : game.successors(v)) {
                if (!result.inside[w]) {
                    result.trapping[v] = w;
                    break;
                }
            }
            assert(result.trapping[v] != -1);
        }
    }
    return result;
}

namespace {

void check_orders_random_vertices(const Game& game, const Permutation& permutation) {
    if (permutation.size() != game.count_of(VertexKind::Random))
        throw std::invalid_argument("permutation must order all random vertices");
    std::vector<bool> seen(game.vertex_count(), false);
    for (int v : permutation.order) {
        if (v < 0 || v >= game.vertex_count() || game.kind(v) != VertexKind::Random || seen[v])
            throw std::invalid_argument("permutation must order all random vertices");
        seen[v] = true;
    }
}

}  // namespace

RegionPartition compute_regions(const Game& game, const Permutation& permutation) {
    check_orders_random_vertices(game, permutation);
    if (game.target() < 0) throw std::invalid_argument("game has no target");
    int n = game.vertex_count();
    int k = permutation.size();

    RegionPartition part;
    part.k = k;
    part.regions.assign(k + 2, {});
    part.rank.assign(n, -1);
    part.level.assign(n, -1);

    part.rank[game.target()] = k + 1;
    part.level[game.target()] = 0;

    // Rank i claims what the attractor of {order[i-1], ..., order[k-1], target}
    // adds below the ranks already assigned.
    std::vector<int> seed = {game.target()};
    for (int i = k; i >= 1; --i) {
        seed.push_back(permutation.order[i - 1]);
        AttractorResult attractor = deterministic_attractor(game, seed);
        for (int v = 0; v < n; ++v) {
            if (attractor.inside[v] && part.rank[v] == -1) {
                part.rank[v] = i;
                part.level[v] = attractor.level[v];
            }
        }
    }

    if (game.sink() >= 0 && part.rank[game.sink()] == -1) {
        part.rank[game.sink()] = 0;
        part.level[game.sink()] = 0;
    }
    for (int v = 0; v < n; ++v) {
        if (part.rank[v] == -1)
            throw std::invalid_argument("game is not normalized: vertex '" + game.name(v) +
                                        "' lies in no region");
        part.regions[part.rank[v]].push_back(v);
    }
    return part;
}

void compute_region_strategies(const Game& game, RegionPartition& partition) {
    int n = game.vertex_count();
    partition.max_strategy.assign(n, -1);
    partition.min_strategy.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (game.kind(v) == VertexKind::Max) {
            // Stays on its own rank while strictly descending attractor levels,
            // so the play hits the rank's random vertex or the target.
            for (int w : game.successors(v)) {
                if (partition.rank[w] == partition.rank[v] &&
                    partition.level[w] < partition.level[v]) {
                    partition.max_strategy[v] = w;
                    break;
                }
            }
            assert(partition.max_strategy[v] != -1);
        } else if (game.kind(v) == VertexKind::Min) {
            // Every successor sits at the same rank or higher; staying level
            // is the best Min can do without leaving the attractor.
            for (int w : game.successors(v)) {
                if (partition.rank[w] == partition.rank[v]) {
                    partition.min_strategy[v] = w;
                    break;
                }
            }
            assert(partition.min_strategy[v] != -1);
        }
    }
}

}  // namespace ssg
