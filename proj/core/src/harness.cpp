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

#include "ssg/harness.hpp"

#include <chrono>
#include <stdexcept>
#include <string>
#include <utility>

#include "ssg/enumeration.hpp"
#include "ssg/generate.hpp"
#include "ssg/improvement.hpp"
#include "ssg/oracle.hpp"
#include "ssg/rational.hpp"

namespace ssg {

Solution run_solve(const Game& game, Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::Enumerate:
            return enumerate_solve(game);
        case Algorithm::Improve:
            return improve_solve(game).first;
        case Algorithm::Oracle: {
            BruteForceSolution brute = brute_force_solve(game);
            Solution solution;
            solution.values = std::move(brute.values);
            solution.max_strategy = std::move(brute.max_strategy);
            solution.min_strategy = std::move(brute.min_strategy);
            solution.stats.pairs_examined = brute.pairs_examined;
            return solution;
        }
    }
    throw std::invalid_argument("unknown algorithm");
}

std::string solve_report(const Game& game, Algorithm algorithm, const ReportOptions& options) {
    return render_report(game, algorithm, run_solve(game, algorithm), options);
}

std::string render_report(const Game& game, Algorithm algorithm, const Solution& solution,
                          const ReportOptions& options) {
    if (options.stats && !verify_optimal(game, solution.max_strategy, solution.min_strategy))
        throw std::logic_error("solver returned non-optimal strategies");

    std::string out;
    for (int v = 0; v < game.vertex_count(); ++v)
        out += "value " + game.name(v) + " " + format_rational(solution.values[v]) + "\n";
    for (int v : game.vertices_of(VertexKind::Max))
        out += "max-strategy " + game.name(v) + " " + game.name(solution.max_strategy[v]) + "\n";
    for (int v : game.vertices_of(VertexKind::Min))
        out += "min-strategy " + game.name(v) + " " + game.name(solution.min_strategy[v]) + "\n";
    if (algorithm != Algorithm::Oracle) {
        out += "permutation";
        for (int f : solution.permutation.order) out += " " + game.name(f);
        out += "\n";
    }
    if (options.stats) {
        if (algorithm == Algorithm::Enumerate)
            out += "stats permutations=" + std::to_string(solution.stats.permutations_examined) +
                   "\n";
        else if (algorithm == Algorithm::Improve)
            out += "stats steps=" + std::to_string(solution.stats.improvement_steps) + "\n";
        else
            out += "stats pairs=" + std::to_string(solution.stats.pairs_examined) + "\n";
    }
    return out;
}

std::string run_bench(const BenchSpec& spec) {
    if (spec.k_min < 0 || spec.k_min > spec.k_max)
        throw std::invalid_argument("random count range is empty");
    std::string csv = "n,k,edges,algorithm,seed,micros,work_units\n";
    for (int k = spec.k_min; k <= spec.k_max; ++k) {
        int inner = spec.n - 2;
        if (inner < k) throw std::invalid_argument("vertex budget below the random count");
        GenSpec gen;
        gen.random_count = k;
        gen.max_count = (inner - k + 1) / 2;
        gen.min_count = inner - k - gen.max_count;
        gen.out_degree_min = 1;
        gen.out_degree_max = 5;
        gen.max_denominator = 8;
        gen.seed = spec.seed + static_cast<std::uint64_t>(k);
        Game game = generate_game(gen);

        auto row = [&](const char* name, Algorithm algorithm, long long SolveStats::*work) {
            auto start = std::chrono::steady_clock::now();
            Solution solution = run_solve(game, algorithm);
            auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
            csv += std::to_string(game.vertex_count()) + "," + std::to_string(k) + "," +
                   std::to_string(game.edge_count()) + "," + name + "," +
                   std::to_string(gen.seed) + "," + std::to_string(micros) + "," +
                   std::to_string(solution.stats.*work) + "\n";
        };
        if (spec.run_enumerate) row("enum", Algorithm::Enumerate, &SolveStats::permutations_examined);
        if (spec.run_improve) row("improve", Algorithm::Improve, &SolveStats::improvement_steps);
    }
    return csv;
}

}  // namespace ssg
