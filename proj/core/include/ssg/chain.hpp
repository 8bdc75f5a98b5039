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

#ifndef SSG_CHAIN_HPP
#define SSG_CHAIN_HPP

#include <utility>
#include <vector>

#include "ssg/game.hpp"
#include "ssg/regions.hpp"

namespace ssg {

/**
 * Markov chain over ranks 0..k+1 induced by a region partition: row i sums
 * the distribution of the rank-i random vertex per successor rank. Rows 0
 * and k+1 are absorbing self-loops.
 */
struct EmbeddedChain {
    std::vector<std::vector<Rational>> p;

    int size() const { return static_cast<int>(p.size()); }
};

EmbeddedChain embed_chain(const Game& game, const RegionPartition& partition);

/**
 * Exact absorption probabilities into the last state: x[i] is the chance of
 * reaching state k+1 from i. States that cannot reach k+1 get value zero;
 * the rest solve the linear system by exact elimination.
 */
struct ChainValues {
    std::vector<Rational> x;
    std::vector<bool> reachable;  // can reach the last state
};

ChainValues solve_chain(const EmbeddedChain& chain);

/** Values of a permutation: every vertex takes the chain value of its rank. */
struct PermutationValues {
    Valuation values;
    RegionPartition partition;  // strategies not filled
    EmbeddedChain chain;
};

PermutationValues permutation_values(const Game& game, const Permutation& permutation);

/**
 * General finite reachability chain for policy evaluation and brute-force
 * scoring: one row of (state, probability) pairs per state, an empty row
 * meaning the state is absorbing. Rows must be empty or sum exactly to 1.
 */
struct SparseChain {
    int target = -1;
    std::vector<std::vector<std::pair<int, Rational>>> rows;

    int size() const { return static_cast<int>(rows.size()); }
};

/** Exact probability of reaching chain.target from every state. */
std::vector<Rational> solve_reach_values(const SparseChain& chain);

}  // namespace ssg

#endif
