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

#include "ssg/improvement.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "ssg/chain.hpp"
#include "ssg/enumeration.hpp"
#include "ssg/regions.hpp"

namespace ssg {

OnePlayerGame restrict_game(const Game& game, const PositionalStrategy& max_strategy) {
    if (!strategy_total_for(game, VertexKind::Max, max_strategy))
        throw std::invalid_argument("strategy must pick one edge per Max vertex");
    GameBuilder builder;
    for (int v = 0; v < game.vertex_count(); ++v) builder.add_vertex(game.name(v), game.kind(v));
    for (int v = 0; v < game.vertex_count(); ++v) {
        if (game.kind(v) == VertexKind::Max) {
            builder.add_edge(v, max_strategy[v]);
        } else if (game.kind(v) == VertexKind::Random) {
            for (const auto& [w, p] : game.distribution(v)) builder.add_edge(v, w, p);
        } else if (game.kind(v) == VertexKind::Min) {
            for (int w : game.successors(v)) builder.add_edge(v, w);
        }
    }
    return OnePlayerGame{builder.build()};
}

OnePlayerSolution optimize_one_player(const Game& game, VertexKind optimizer) {
    if (optimizer != VertexKind::Max && optimizer != VertexKind::Min)
        throw std::invalid_argument("optimizer must be Max or Min");
    VertexKind frozen = optimizer == VertexKind::Max ? VertexKind::Min : VertexKind::Max;
    int n = game.vertex_count();
    for (int v = 0; v < n; ++v)
        if (game.kind(v) == frozen && game.out_degree(v) != 1)
            throw std::invalid_argument("opposing vertices must be frozen to one edge");

    // A minimizer can stall on a plateau: a vertex of true value 0 can look
    // unimprovable even though only a cycle realises that 0. Fixing the
    // value-0 set up front removes the plateau; everything left is absorbed
    // under every policy, making each local switch a strict exact decrease.
    std::vector<bool> zero(n, false);
    OnePlayerSolution result;
    result.strategy.assign(n, -1);
    std::vector<int> active;
    if (optimizer == VertexKind::Min) {
        PositiveValueResult positive = positive_value_set(game);
        for (int v = 0; v < n; ++v) zero[v] = !positive.positive[v];
        for (int v = 0; v < n; ++v)
            if (game.kind(v) == VertexKind::Min && zero[v])
                result.strategy[v] = positive.min_safety[v];
    }
    for (int v = 0; v < n; ++v) {
        if (game.kind(v) != optimizer || zero[v]) continue;
        result.strategy[v] = game.successors(v)[0];
        active.push_back(v);
    }

    auto better = [&](const Rational& a, const Rational& b) {
        return optimizer == VertexKind::Min ? a < b : a > b;
    };
    while (true) {
        SparseChain chain;
        chain.target = game.target();
        chain.rows.resize(n);
        for (int v = 0; v < n; ++v) {
            if (zero[v] || v == chain.target || game.out_degree(v) == 0) continue;
            if (game.kind(v) == VertexKind::Random) {
                chain.rows[v].assign(game.distribution(v).begin(), game.distribution(v).end());
            } else if (game.kind(v) == optimizer) {
                chain.rows[v].emplace_back(result.strategy[v], Rational(1));
            } else {
                chain.rows[v].emplace_back(game.successors(v)[0], Rational(1));
            }
        }
        std::vector<Rational> x = solve_reach_values(chain);

        bool changed = false;
        for (int v : active) {
            int best = -1;
            for (int w : game.successors(v))
                if (best == -1 || better(x[w], x[best])) best = w;
            if (better(x[best], x[result.strategy[v]])) {
                result.strategy[v] = best;
                changed = true;
            }
        }
        if (!changed) {
            result.values.assign(x.begin(), x.end());
            return result;
        }
    }
}

OnePlayerSolution solve_one_player_min(const OnePlayerGame& game) {
    return optimize_one_player(game.game, VertexKind::Min);
}

Permutation improvement_step(const Game& game, const Permutation& permutation) {
    RegionPartition partition = compute_regions(game, permutation);
    compute_region_strategies(game, partition);
    OnePlayerGame restricted = restrict_game(game, partition.max_strategy);
    OnePlayerSolution best_reply = solve_one_player_min(restricted);
    return build_live_permutation(restricted.game, best_reply.values);
}

namespace {

/* Carries a caller-supplied ordering of the original random vertices into the image. */
Permutation image_permutation(const Game& original, const NormalizationMap& norm,
                              const Permutation& given) {
    if (given.size() != original.count_of(VertexKind::Random))
        throw std::invalid_argument("initial permutation must order all random vertices");
    std::vector<bool> seen(original.vertex_count(), false);
    Permutation image_order;
    for (int v : given.order) {
        if (v < 0 || v >= original.vertex_count() || original.kind(v) != VertexKind::Random ||
            seen[v])
            throw std::invalid_argument("initial permutation must order all random vertices");
        seen[v] = true;
        if (norm.vertex_map[v] >= 0) image_order.order.push_back(norm.vertex_map[v]);
    }
    return image_order;
}

void require_live(const Game& image, const Permutation& f) {
    if (!check_liveness(image, compute_regions(image, f)))
        throw std::invalid_argument("initial permutation is not live");
}

long long factorial_capped(int k) {
    long long cap = 1;
    for (int i = 2; i <= k; ++i) {
        if (cap > std::numeric_limits<long long>::max() / i)
            return std::numeric_limits<long long>::max();
        cap *= i;
    }
    return cap;
}

}  // namespace

std::pair<Solution, ImprovementTrace> improve_solve(const Game& game,
                                                    const std::optional<Permutation>& initial) {
    require_valid(game);
    ImprovementTrace trace;
    trace.norm = normalize_game(game);
    const Game& image = trace.norm.image;

    Permutation f;
    if (initial) {
        f = image_permutation(game, trace.norm, *initial);
        require_live(image, f);
    } else {
        f = build_live_permutation(image, Valuation(image.vertex_count(), Rational(0)));
    }

    long long bound = factorial_capped(image.count_of(VertexKind::Random));
    long long steps = 0;
    while (true) {
        PermutationValues pv = permutation_values(image, f);
        if (check_self_consistency(f, pv.values)) {
            compute_region_strategies(image, pv.partition);
            trace.entries.emplace_back(f, pv.values);
            SolveStats stats;
            stats.improvement_steps = steps;
            return {lift_solution(game, trace.norm, pv.partition, pv.values, stats), trace};
        }
        if (steps >= bound) throw std::logic_error("improvement exceeded the permutation bound");
        ++steps;
        compute_region_strategies(image, pv.partition);
        OnePlayerGame restricted = restrict_game(image, pv.partition.max_strategy);
        OnePlayerSolution best_reply = solve_one_player_min(restricted);
        trace.entries.emplace_back(f, best_reply.values);
        f = build_live_permutation(restricted.game, best_reply.values);
    }
}

NaiveOutcome naive_improve(const Game& game, const std::optional<Permutation>& initial,
                           long long max_steps) {
    require_valid(game);
    NormalizationMap norm = normalize_game(game);
    const Game& image = norm.image;

    Permutation f;
    if (initial) {
        f = image_permutation(game, norm, *initial);
        require_live(image, f);
    } else {
        f = build_live_permutation(image, Valuation(image.vertex_count(), Rational(0)));
    }

    NaiveOutcome outcome;
    std::map<std::vector<int>, std::size_t> seen;
    std::vector<Permutation> history;
    while (true) {
        PermutationValues pv = permutation_values(image, f);
        if (check_self_consistency(f, pv.values)) {
            compute_region_strategies(image, pv.partition);
            SolveStats stats;
            stats.improvement_steps = outcome.steps;
            outcome.kind = NaiveOutcome::Kind::Converged;
            outcome.solution = lift_solution(game, norm, pv.partition, pv.values, stats);
            return outcome;
        }
        if (auto it = seen.find(f.order); it != seen.end()) {
            outcome.kind = NaiveOutcome::Kind::CycleDetected;
            outcome.cycle.assign(history.begin() + static_cast<std::ptrdiff_t>(it->second),
                                 history.end());
            return outcome;
        }
        seen.emplace(f.order, history.size());
        history.push_back(f);
        if (outcome.steps >= max_steps) {
            outcome.kind = NaiveOutcome::Kind::Undecided;
            return outcome;
        }
        ++outcome.steps;

        // Re-sorting by current values looks like the obvious move and is
        // exactly the policy that can loop; liveness is restored by the
        // guided rebuild when the sort breaks it.
        std::vector<int> sorted = f.order;
        std::stable_sort(sorted.begin(), sorted.end(),
                         [&](int a, int b) { return pv.values[a] < pv.values[b]; });
        Permutation candidate{std::move(sorted)};
        if (!check_liveness(image, compute_regions(image, candidate)))
            candidate = build_live_permutation(image, pv.values);
        f = std::move(candidate);
    }
}

}  // namespace ssg
