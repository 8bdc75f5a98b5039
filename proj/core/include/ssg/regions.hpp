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

#ifndef SSG_REGIONS_HPP
#define SSG_REGIONS_HPP

#include <span>
#include <vector>

#include "ssg/game.hpp"

namespace ssg {

/**
 * Deterministic attractor of Max towards a seed set X. Random vertices
 * outside X are never attracted; a Max vertex joins as soon as one
 * successor is inside, a Min vertex only once all its successors are.
 */
struct AttractorResult {
    std::vector<bool> inside;
    std::vector<int> level;          // BFS round of entry, 0 on the seed, -1 outside
    PositionalStrategy attracting;   // Max vertices inside with level >= 1: a lower-level successor
    PositionalStrategy trapping;     // Min vertices outside: a successor staying outside
};

AttractorResult deterministic_attractor(const Game& game, std::span<const int> seed);

/**
 * Partition of the vertices by permutation rank. Region i (1 <= i <= k)
 * is the part of the attractor of {order[i-1], ..., order[k-1], target}
 * not claimed by a higher rank; rank k+1 is the target alone and rank 0
 * the sink alone. Strategies are filled by compute_region_strategies:
 * the Max strategy descends attractor levels within its region, the Min
 * strategy stays on its exact rank.
 */
struct RegionPartition {
    int k = 0;
    std::vector<std::vector<int>> regions;  // size k+2, each sorted ascending
    std::vector<int> rank;                  // per vertex, 0..k+1
    std::vector<int> level;                 // attractor level within the vertex's own region
    PositionalStrategy max_strategy;
    PositionalStrategy min_strategy;
};

/**
 * Computes regions, ranks and levels for a permutation of all random
 * vertices. Throws std::invalid_argument if some vertex falls in no
 * region, which only happens when the game is not normalized.
 */
RegionPartition compute_regions(const Game& game, const Permutation& permutation);

/** Fills max_strategy/min_strategy of a partition produced by compute_regions. */
void compute_region_strategies(const Game& game, RegionPartition& partition);

}  // namespace ssg

#endif
