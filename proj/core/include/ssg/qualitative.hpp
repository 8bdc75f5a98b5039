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

#ifndef SSG_QUALITATIVE_HPP
#define SSG_QUALITATIVE_HPP

#include <vector>

#include "ssg/game.hpp"

namespace ssg {

/**
 * Vertices of positive value: the least set containing the target and
 * closed under "Max has a successor inside, Min has all successors inside,
 * random has positive mass inside". The complement is the value-0 region;
 * min_safety keeps Min inside that complement forever.
 */
struct PositiveValueResult {
    std::vector<bool> positive;
    PositionalStrategy min_safety;  // Min vertices outside: least-index successor staying outside
};

PositiveValueResult positive_value_set(const Game& game);

/**
 * Vertices of value exactly 1, by iterated elimination: shrink a candidate
 * set to one that Min and chance cannot leave and Max can always positively
 * re-reach the target from. max_strategy reaches the target almost surely
 * from every vertex of the set.
 */
struct AlmostSureResult {
    std::vector<bool> almost_sure;
    PositionalStrategy max_strategy;
};

AlmostSureResult almost_sure_set(const Game& game);

/**
 * Merge of the value-1 region into the target and of the value-0 region
 * into the sink. In the image every vertex other than the two terminals has
 * a value strictly between 0 and 1, which the permutation solvers require.
 */
struct NormalizationMap {
    static constexpr int kToTarget = -2;
    static constexpr int kToSink = -3;

    Game image;
    std::vector<int> vertex_map;    // original -> image index, kToTarget or kToSink
    std::vector<int> preimage;      // image -> original index; -1 for a fresh sink
    PositionalStrategy value1_strategy;  // original Max vertices of the value-1 region
    PositionalStrategy value0_strategy;  // original Min vertices of the value-0 region

    bool is_identity() const;

    /** Original-game valuation from an image valuation: merged vertices take 1 or 0. */
    Valuation lift(const Valuation& image_values) const;

    /** Image index a surviving original vertex maps to, with merges going to the terminals. */
    int image_of(int original) const;
};

NormalizationMap normalize_game(const Game& game);

}  // namespace ssg

#endif
