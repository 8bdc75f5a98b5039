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

#ifndef SSG_IMPROVEMENT_HPP
#define SSG_IMPROVEMENT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ssg/game.hpp"
#include "ssg/qualitative.hpp"

namespace ssg {

/** A game whose Max vertices all have exactly one outgoing edge. */
struct OnePlayerGame {
    Game game;
};

/** Freezes Max to a total strategy; all other vertices keep their edges. */
OnePlayerGame restrict_game(const Game& game, const PositionalStrategy& max_strategy);

struct OnePlayerSolution {
    Valuation values;
    PositionalStrategy strategy;  // optimal choices of the free player
};

/**
 * Optimal values against a frozen Max: the value-0 region is fixed by
 * qualitative analysis first, then Min policy iteration runs on the rest
 * with exact chain evaluation per step.
 */
OnePlayerSolution solve_one_player_min(const OnePlayerGame& game);

/**
 * Policy iteration core shared by the Min and Max one-player solvers.
 * The opposing controlled kind must already be frozen to out-degree one.
 */
OnePlayerSolution optimize_one_player(const Game& game, VertexKind optimizer);

/**
 * One improvement round on a normalized game: freeze Max to the strategy of
 * the live permutation, solve the resulting one-player game exactly, and
 * rebuild a live permutation guided by those values. A self-consistent
 * input is a fixed point.
 */
Permutation improvement_step(const Game& game, const Permutation& permutation);

/**
 * The permutations visited by improve_solve with the one-player values that
 * guided each hop, on the normalized image. Valuations never decrease, and
 * strictly increase somewhere between consecutive non-final entries.
 */
struct ImprovementTrace {
    NormalizationMap norm;
    std::vector<std::pair<Permutation, Valuation>> entries;
};

/**
 * Exact solve by permutation improvement: start from a live permutation
 * (built with an all-zero guide unless one is given over the original
 * game's random vertices) and improve until self-consistent. Terminates
 * within k! steps; the stats carry the step count.
 */
std::pair<Solution, ImprovementTrace> improve_solve(
    const Game& game, const std::optional<Permutation>& initial = std::nullopt);

/**
 * The textbook-looking policy that simply re-sorts the permutation by its
 * current values (stable, liveness repaired by rebuilding when broken).
 * Unlike improvement_step this can revisit permutations, so the outcome is
 * either a solution, a detected cycle, or undecided after max_steps.
 */
struct NaiveOutcome {
    enum class Kind { Converged, CycleDetected, Undecided };
    Kind kind = Kind::Undecided;
    std::optional<Solution> solution;     // Converged
    std::vector<Permutation> cycle;       // CycleDetected, on the normalized image
    long long steps = 0;
};

NaiveOutcome naive_improve(const Game& game,
                           const std::optional<Permutation>& initial = std::nullopt,
                           long long max_steps = 1000);

}  // namespace ssg

#endif
