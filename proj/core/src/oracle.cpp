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

#include "ssg/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ssg/chain.hpp"
#include "ssg/improvement.hpp"

namespace ssg {

namespace {

/* Odometer over one player's successor choices, most significant first. */
struct ChoiceSpace {
    std::vector<int> vertices;
    std::vector<int> choice;

    bool advance(const Game& game) {
        for (int i = static_cast<int>(vertices.size()) - 1; i >= 0; --i) {
            if (++choice[i] < game.out_degree(vertices[i])) return true;
            choice[i] = 0;
        }
        return false;
    }

    void reset() { std::fill(choice.begin(), choice.end(), 0); }

    PositionalStrategy strategy(const Game& game) const {
        PositionalStrategy strat(game.vertex_count(), -1);
        for (std::size_t i = 0; i < vertices.size(); ++i)
            strat[vertices[i]] = game.successors(vertices[i])[choice[i]];
        return strat;
    }
};

ChoiceSpace space_of(const Game& game, VertexKind kind) {
    ChoiceSpace space;
    space.vertices = game.vertices_of(kind);
    space.choice.assign(space.vertices.size(), 0);
    return space;
}

Valuation chain_value(const Game& game, const PositionalStrategy& sigma,
                      const PositionalStrategy& tau) {
    SparseChain chain;
    chain.target = game.target();
    chain.rows.resize(game.vertex_count());
    for (int v = 0; v < game.vertex_count(); ++v) {
        if (v == chain.target || game.out_degree(v) == 0) continue;
        if (game.kind(v) == VertexKind::Max)
            chain.rows[v].emplace_back(sigma[v], Rational(1));
        else if (game.kind(v) == VertexKind::Min)
            chain.rows[v].emplace_back(tau[v], Rational(1));
        else
            chain.rows[v].assign(game.distribution(v).begin(), game.distribution(v).end());
    }
    return solve_reach_values(chain);
}

void guard_pair_count(const Game& game, const BruteForceOptions& options) {
    long long pairs = 1;
    for (int v = 0; v < game.vertex_count(); ++v) {
        if (!game.is_controlled(v)) continue;
        pairs *= game.out_degree(v);
        if (pairs > options.max_pairs)
            throw std::invalid_argument("brute force refused: strategy space exceeds " +
                                        std::to_string(options.max_pairs) + " pairs");
    }
}

long long pair_count(const Game& game) {
    long long pairs = 1;
    for (int v = 0; v < game.vertex_count(); ++v)
        if (game.is_controlled(v)) pairs *= game.out_degree(v);
    return pairs;
}

/*
 * One full minimax sweep: the outer player ranges over its strategies, the
 * inner player answers with its pointwise best, the outer keeps its pointwise
 * best of those. With `match` set, also reports the first outer strategy
 * whose inner-best vector equals it.
 */
struct SweepResult {
    Valuation value;
    PositionalStrategy witness;
};

SweepResult sweep(const Game& game, Player outer, const Valuation* match) {
    VertexKind outer_kind = outer == Player::Max ? VertexKind::Max : VertexKind::Min;
    VertexKind inner_kind = outer == Player::Max ? VertexKind::Min : VertexKind::Max;
    ChoiceSpace outer_space = space_of(game, outer_kind);
    ChoiceSpace inner_space = space_of(game, inner_kind);

    SweepResult result;
    bool outer_set = false;
    do {
        PositionalStrategy outer_strat = outer_space.strategy(game);
        Valuation inner_best;
        bool inner_set = false;
        inner_space.reset();
        do {
            PositionalStrategy inner_strat = inner_space.strategy(game);
            Valuation x = outer == Player::Max ? chain_value(game, outer_strat, inner_strat)
                                               : chain_value(game, inner_strat, outer_strat);
            if (!inner_set) {
                inner_best = std::move(x);
                inner_set = true;
            } else {
                for (int v = 0; v < game.vertex_count(); ++v) {
                    bool keep_new = outer == Player::Max ? x[v] < inner_best[v]
                                                         : x[v] > inner_best[v];
                    if (keep_new) inner_best[v] = x[v];
                }
            }
        } while (inner_space.advance(game));

        if (match) {
            if (inner_best == *match) {
                result.witness = std::move(outer_strat);
                return result;
            }
        } else if (!outer_set) {
            result.value = std::move(inner_best);
            outer_set = true;
        } else {
            for (int v = 0; v < game.vertex_count(); ++v) {
                bool keep_new = outer == Player::Max ? inner_best[v] > result.value[v]
                                                     : inner_best[v] < result.value[v];
                if (keep_new) result.value[v] = inner_best[v];
            }
        }
    } while (outer_space.advance(game));

    if (match) throw std::logic_error("no strategy achieves the minimax value");
    return result;
}

Game frozen_min_copy(const Game& game, const PositionalStrategy& min_strategy) {
    if (!strategy_total_for(game, VertexKind::Min, min_strategy))
        throw std::invalid_argument("strategy must pick one edge per Min vertex");
    GameBuilder builder;
    for (int v = 0; v < game.vertex_count(); ++v) builder.add_vertex(game.name(v), game.kind(v));
    for (int v = 0; v < game.vertex_count(); ++v) {
        if (game.kind(v) == VertexKind::Min) {
            builder.add_edge(v, min_strategy[v]);
        } else if (game.kind(v) == VertexKind::Random) {
            for (const auto& [w, p] : game.distribution(v)) builder.add_edge(v, w, p);
        } else if (game.kind(v) == VertexKind::Max) {
            for (int w : game.successors(v)) builder.add_edge(v, w);
        }
    }
    return builder.build();
}

}  // namespace

Valuation brute_force_values(const Game& game, const BruteForceOptions& options) {
    require_valid(game);
    guard_pair_count(game, options);
    Valuation max_min = sweep(game, Player::Max, nullptr).value;
    Valuation min_max = sweep(game, Player::Min, nullptr).value;
    if (max_min != min_max) throw std::logic_error("brute force found a minimax gap");
    return max_min;
}

BruteForceSolution brute_force_solve(const Game& game, const BruteForceOptions& options) {
    BruteForceSolution solution;
    solution.values = brute_force_values(game, options);
    solution.max_strategy = sweep(game, Player::Max, &solution.values).witness;
    solution.min_strategy = sweep(game, Player::Min, &solution.values).witness;
    solution.pairs_examined = pair_count(game);
    return solution;
}

Valuation best_response_value(const Game& game, Player fixed, const PositionalStrategy& strategy) {
    if (fixed == Player::Max) {
        OnePlayerGame restricted = restrict_game(game, strategy);
        return optimize_one_player(restricted.game, VertexKind::Min).values;
    }
    return optimize_one_player(frozen_min_copy(game, strategy), VertexKind::Max).values;
}

bool verify_optimal(const Game& game, const PositionalStrategy& max_strategy,
                    const PositionalStrategy& min_strategy) {
    return best_response_value(game, Player::Max, max_strategy) ==
           best_response_value(game, Player::Min, min_strategy);
}

std::vector<double> value_iterate(const Game& game, int rounds) {
    int n = game.vertex_count();
    std::vector<double> x(n, 0.0);
    x[game.target()] = 1.0;
    std::vector<double> next = x;
    for (int round = 0; round < rounds; ++round) {
        for (int v = 0; v < n; ++v) {
            if (game.out_degree(v) == 0) continue;
            if (game.kind(v) == VertexKind::Random) {
                double sum = 0.0;
                for (const auto& [w, p] : game.distribution(v)) sum += p.get_d() * x[w];
                next[v] = sum;
            } else {
                double best = x[game.successors(v)[0]];
                for (int w : game.successors(v))
                    best = game.kind(v) == VertexKind::Max ? std::max(best, x[w])
                                                           : std::min(best, x[w]);
                next[v] = best;
            }
        }
        x = next;
    }
    return x;
}

}  // namespace ssg
