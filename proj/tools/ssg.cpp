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

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "ssg/game_io.hpp"
#include "ssg/generate.hpp"
#include "ssg/harness.hpp"
#include "ssg/qualitative.hpp"

namespace {

ssg::Game read_game(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return ssg::parse_game(text.str());
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

ssg::Algorithm algorithm_of(const std::string& name) {
    if (name == "enum") return ssg::Algorithm::Enumerate;
    if (name == "improve") return ssg::Algorithm::Improve;
    return ssg::Algorithm::Oracle;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver for simple stochastic games"};
    app.require_subcommand(1);
    auto algorithm_check = CLI::IsMember({"enum", "improve", "oracle"});

    auto* solve = app.add_subcommand("solve", "Solve a game and report values and strategies");
    std::string solve_input, solve_output, solve_dot, solve_algorithm = "enum";
    bool solve_stats = false;
    solve->add_option("--input", solve_input, "Game file to read")->required();
    solve->add_option("--algorithm", solve_algorithm, "Solver to run (default enum)")
        ->check(algorithm_check);
    solve->add_option("--output", solve_output, "Write the report here instead of stdout");
    solve->add_option("--emit-dot", solve_dot, "Also write an annotated Graphviz drawing");
    solve->add_flag("--stats", solve_stats, "Verify the strategies and append work counters");
    solve->callback([&] {
        ssg::Game game = read_game(solve_input);
        ssg::Algorithm algorithm = algorithm_of(solve_algorithm);
        ssg::Solution solution = ssg::run_solve(game, algorithm);
        emit(ssg::render_report(game, algorithm, solution, {.stats = solve_stats}), solve_output);
        if (!solve_dot.empty()) {
            ssg::DotAnnotations notes;
            notes.values = &solution.values;
            notes.max_strategy = &solution.max_strategy;
            notes.min_strategy = &solution.min_strategy;
            emit(ssg::export_dot(game, notes), solve_dot);
        }
    });

    auto* check = app.add_subcommand("check", "Parse and validate a game file");
    std::string check_input;
    check->add_option("--input", check_input, "Game file to read")->required();
    check->callback([&] {
        ssg::Game game = read_game(check_input);
        std::cout << "ok: " << game.vertex_count() << " vertices, " << game.edge_count()
                  << " edges, " << game.count_of(ssg::VertexKind::Random) << " random\n";
    });

    auto* normalize = app.add_subcommand("normalize", "Rewrite a game in normalized form");
    std::string normalize_input, normalize_output;
    normalize->add_option("--input", normalize_input, "Game file to read")->required();
    normalize->add_option("--output", normalize_output, "Write the image here instead of stdout");
    normalize->callback([&] {
        emit(ssg::write_game(ssg::normalize_game(read_game(normalize_input)).image),
             normalize_output);
    });

    auto* generate = app.add_subcommand("generate", "Emit a pseudorandom game");
    ssg::GenSpec gen;
    std::string generate_output;
    generate->add_option("--max", gen.max_count, "Number of Max vertices");
    generate->add_option("--min", gen.min_count, "Number of Min vertices");
    generate->add_option("--random", gen.random_count, "Number of random vertices");
    generate->add_option("--degree-min", gen.out_degree_min, "Smallest out-degree (default 1)");
    generate->add_option("--degree-max", gen.out_degree_max, "Largest out-degree (default 3)");
    generate->add_option("--max-denominator", gen.max_denominator,
                         "Probability denominator bound (default 4)");
    generate->add_option("--terminal-percent", gen.terminal_edge_percent,
                         "Chance per vertex of wiring a terminal in (default 25)");
    generate->add_option("--seed", gen.seed, "Generator seed");
    generate->add_option("--output", generate_output, "Write the game here instead of stdout");
    generate->callback([&] { emit(ssg::write_game(ssg::generate_game(gen)), generate_output); });

    auto* bench = app.add_subcommand("bench", "Time the solvers on generated games");
    ssg::BenchSpec bench_spec;
    std::string bench_output;
    bool bench_skip_enum = false, bench_skip_improve = false;
    bench->add_option("--n", bench_spec.n, "Total vertices per game (default 100)");
    bench->add_option("--k-min", bench_spec.k_min, "Smallest random count (default 1)");
    bench->add_option("--k-max", bench_spec.k_max, "Largest random count (default 3)");
    bench->add_option("--seed", bench_spec.seed, "Base seed (default 1)");
    bench->add_flag("--skip-enum", bench_skip_enum, "Skip the enumeration solver");
    bench->add_flag("--skip-improve", bench_skip_improve, "Skip the improvement solver");
    bench->add_option("--output", bench_output, "Write the CSV here instead of stdout");
    bench->callback([&] {
        bench_spec.run_enumerate = !bench_skip_enum;
        bench_spec.run_improve = !bench_skip_improve;
        emit(ssg::run_bench(bench_spec), bench_output);
    });

    auto* export_cmd = app.add_subcommand("export", "Render a game as Graphviz DOT");
    std::string export_input, export_output, export_annotate;
    export_cmd->add_option("--input", export_input, "Game file to read")->required();
    export_cmd->add_option("--output", export_output, "Write the DOT here instead of stdout");
    export_cmd->add_option("--annotate", export_annotate, "Solve first and overlay the solution")
        ->check(algorithm_check);
    export_cmd->callback([&] {
        ssg::Game game = read_game(export_input);
        if (export_annotate.empty()) {
            emit(ssg::export_dot(game), export_output);
            return;
        }
        ssg::Solution solution = ssg::run_solve(game, algorithm_of(export_annotate));
        ssg::DotAnnotations notes;
        notes.values = &solution.values;
        notes.max_strategy = &solution.max_strategy;
        notes.min_strategy = &solution.min_strategy;
        emit(ssg::export_dot(game, notes), export_output);
    });

    try {
        CLI11_PARSE(app, argc, argv);
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
    return 0;
}
