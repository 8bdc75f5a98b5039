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

#ifndef SSG_ENUMERATION_HPP
#define SSG_ENUMERATION_HPP

#include "ssg/chain.hpp"
#include "ssg/game.hpp"
#include "ssg/qualitative.hpp"
#include "ssg/regions.hpp"

namespace ssg {

/**
 * Liveness: every random vertex sends positive probability into some
 * strictly higher region, so the play cannot settle below the target.
 */
bool check_liveness(const Game& game, const RegionPartition& partition);

/** Self-consistency: the permutation values are non-decreasing along the ranks. */
bool check_self_consistency(const Permutation& permutation, const Valuation& values);

struct PermutationVerdict {
    bool live = false;
    bool self_consistent = false;
    Valuation values;
};

/** Evaluates both checks for one permutation of a normalized game. */
PermutationVerdict evaluate_permutation(const Game& game, const Permutation& permutation);

/**
 * Constructs a live permutation rank by rank from the top: each pick is an
 * unplaced random vertex with positive one-step probability into the
 * attractor of the picks so far plus the target, preferring the largest
 * guide value and then the least index. With the optimal values as guide
 * the result is live and self-consistent. Throws std::invalid_argument if
 * no pick exists, which means the game is not normalized.
 */
Permutation build_live_permutation(const Game& game, const Valuation& guide);

/**
 * Exact solve by permutation enumeration: normalizes the game, walks the
 * permutations of its random vertices in lexicographic index order and
 * returns the solution of the first live, self-consistent one. The stats
 * carry the number of permutations examined.
 */
Solution enumerate_solve(const Game& game);

/**
 * Shared epilogue of the permutation solvers: turns an accepted partition
 * of the normalized image plus its values into a full original-game
 * solution, filling merged regions from the normalization strategies.
 */
Solution lift_solution(const Game& original, const NormalizationMap& norm,
                       const RegionPartition& partition, const Valuation& image_values,
                       const SolveStats& stats);

}  // namespace ssg

#endif
