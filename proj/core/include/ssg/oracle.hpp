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

#ifndef SSG_ORACLE_HPP
#define SSG_ORACLE_HPP

#include <vector>

#include "ssg/game.hpp"

namespace ssg {

enum class Player { Max, Min };

struct BruteForceOptions {
    long long max_pairs = 1'000'000;
};

/**
 * Ground-truth values by exhausting all positional strategy pairs and
 * taking the vertex-wise max-min. The min-max is computed as well and
 * checked equal. Refuses with a size report beyond max_pairs.
 */
Valuation brute_force_values(const Game& game, const BruteForceOptions& options = {});

/** Brute force plus the lexicographically first optimal strategy pair. */
struct BruteForceSolution {
    Valuation values;
    PositionalStrategy max_strategy;
    PositionalStrategy min_strategy;
    long long pairs_examined = 0;
};

BruteForceSolution brute_force_solve(const Game& game, const BruteForceOptions& options = {});

/**
 * Value of the game once one player is pinned to a total positional
 * strategy, i.e. the opponent's exact best response values.
 */
Valuation best_response_value(const Game& game, Player fixed, const PositionalStrategy& strategy);

/** True iff neither player can improve anywhere against the other's strategy. */
bool verify_optimal(const Game& game, const PositionalStrategy& max_strategy,
                    const PositionalStrategy& min_strategy);

/**
 * Floating-point value iteration from below: x0 is the indicator of the
 * target, each round applies the one-step max/min/average operator.
 * A debugging aid only; every solver path stays exact.
 */
std::vector<double> value_iterate(const Game& game, int rounds);

}  // namespace ssg

#endif
