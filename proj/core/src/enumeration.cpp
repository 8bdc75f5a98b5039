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

#include "ssg/enumeration.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ssg {

namespace {

/* Row i must put positive mass on some rank above i. */
bool live_chain(const EmbeddedChain& chain) {
    for (int i = 1; i < chain.size() - 1; ++i) {
        bool up = false;
        for (int j = i + 1; j < chain.size() && !up; ++j) up = chain.p[i][j] > 0;
        if (!up) return false;
    }
    return true;
}

}  // namespace

bool check_liveness(const Game& game, const RegionPartition& partition) {
    return live_chain(embed_chain(game, partition));
}

bool check_self_consistency(const Permutation& permutation, const Valuation& values) {
    for (int i = 0; i + 1 < permutation.size(); ++i)
        if (values[permutation.order[i]] > values[permutation.order[i + 1]]) return false;
    return true;
}

PermutationVerdict evaluate_permutation(const Game& game, const Permutation& permutation) {
    PermutationValues pv = permutation_values(game, permutation);
    PermutationVerdict verdict;
    verdict.live = live_chain(pv.chain);
    verdict.self_consistent = check_self_consistency(permutation, pv.values);
    verdict.values = std::move(pv.values);
    return verdict;
}

Permutation build_live_permutation(const Game& game, const Valuation& guide) {
    if (static_cast<int>(guide.size()) != game.vertex_count())
        throw std::invalid_argument("guide must value every vertex");
    if (game.target() < 0) throw std::invalid_argument("game has no target");
    std::vector<int> randoms = game.vertices_of(VertexKind::Random);
    int k = static_cast<int>(randoms.size());

    Permutation result;
    result.order.assign(k, -1);
    std::vector<bool> placed(game.vertex_count(), false);
    std::vector<int> chosen = {game.target()};
    for (int rank = k; rank >= 1; --rank) {
        AttractorResult attractor = deterministic_attractor(game, chosen);
        int best = -1;
        for (int r : randoms) {
            if (placed[r]) continue;
            bool mass_up = false;
            for (const auto& [w, p] : game.distribution(r)) {
                if (attractor.inside[w]) {
                    mass_up = true;
                    break;
                }
            }
            // Strict comparison keeps the least index on guide ties.
            if (mass_up && (best == -1 || guide[r] > guide[best])) best = r;
        }
        if (best == -1)
            throw std::invalid_argument("game is not normalized: no rank-" + std::to_string(rank) +
                                        " pick can reach upward");
        result.order[rank - 1] = best;
        placed[best] = true;
        chosen.push_back(best);
    }
    return result;
}

Solution enumerate_solve(const Game& game) {
    require_valid(game);
    NormalizationMap norm = normalize_game(game);
    const Game& image = norm.image;

    std::vector<int> order = image.vertices_of(VertexKind::Random);
    long long examined = 0;
    do {
        ++examined;
        Permutation f{order};
        PermutationValues pv = permutation_values(image, f);
        if (!live_chain(pv.chain)) continue;
        if (!check_self_consistency(f, pv.values)) continue;
        compute_region_strategies(image, pv.partition);
        SolveStats stats;
        stats.permutations_examined = examined;
        return lift_solution(game, norm, pv.partition, pv.values, stats);
    } while (std::next_permutation(order.begin(), order.end()));
    throw std::logic_error("no live self-consistent permutation found");
}

Solution lift_solution(const Game& original, const NormalizationMap& norm,
                       const RegionPartition& partition, const Valuation& image_values,
                       const SolveStats& stats) {
    const Game& image = norm.image;
    assert(!partition.max_strategy.empty());
    int n = original.vertex_count();

    Solution solution;
    solution.stats = stats;
    solution.values = norm.lift(image_values);
    solution.max_strategy.assign(n, -1);
    solution.min_strategy.assign(n, -1);

    // The accepted ordering named by original vertices: each middle region
    // holds exactly one random vertex, always a survivor.
    solution.permutation.order.reserve(partition.k);
    for (int i = 1; i <= partition.k; ++i) {
        for (int v : partition.regions[i]) {
            if (image.kind(v) == VertexKind::Random) {
                solution.permutation.order.push_back(norm.preimage[v]);
                break;
            }
        }
    }

    // A surviving vertex copies its image choice back through any merge: the
    // least original successor landing in the chosen image class keeps the
    // chosen class's exact value.
    auto pull_back = [&](int v, const PositionalStrategy& image_strategy) {
        int image_choice = image_strategy[norm.image_of(v)];
        for (int w : original.successors(v))
            if (norm.image_of(w) == image_choice) return w;
        return -1;
    };
    for (int v = 0; v < n; ++v) {
        if (original.kind(v) == VertexKind::Max) {
            if (norm.vertex_map[v] == NormalizationMap::kToTarget)
                solution.max_strategy[v] = norm.value1_strategy[v];
            else if (norm.vertex_map[v] == NormalizationMap::kToSink)
                solution.max_strategy[v] = original.successors(v)[0];
            else
                solution.max_strategy[v] = pull_back(v, partition.max_strategy);
            assert(solution.max_strategy[v] != -1);
        } else if (original.kind(v) == VertexKind::Min) {
            if (norm.vertex_map[v] == NormalizationMap::kToSink)
                solution.min_strategy[v] = norm.value0_strategy[v];
            else if (norm.vertex_map[v] == NormalizationMap::kToTarget)
                solution.min_strategy[v] = original.successors(v)[0];
            else
                solution.min_strategy[v] = pull_back(v, partition.min_strategy);
            assert(solution.min_strategy[v] != -1);
        }
    }
    return solution;
}

}  // namespace ssg
