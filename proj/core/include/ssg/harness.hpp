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

#ifndef SSG_HARNESS_HPP
#define SSG_HARNESS_HPP

#include <cstdint>
#include <string>

#include "ssg/game.hpp"

namespace ssg {

enum class Algorithm { Enumerate, Improve, Oracle };

struct ReportOptions {
    bool stats = false;
};

/**
 * Runs one solver and renders the plain-text report: a "value <vertex>
 * <num>/<den>" line per vertex, "max-strategy"/"min-strategy" lines for the
 * controlled vertices, the accepted "permutation" for the permutation
 * solvers, and with stats enabled a final "stats permutations=<n>",
 * "stats steps=<n>" or "stats pairs=<n>" line. Stats mode also re-checks
 * the returned strategies as mutual best responses before printing.
 */
std::string solve_report(const Game& game, Algorithm algorithm, const ReportOptions& options = {});

/** Solver whose report is requested plus its solution, for callers needing both. */
Solution run_solve(const Game& game, Algorithm algorithm);

/** Report body for an already computed solution; solve_report is run_solve plus this. */
std::string render_report(const Game& game, Algorithm algorithm, const Solution& solution,
                          const ReportOptions& options = {});

struct BenchSpec {
    int n = 100;            // total vertices including the two terminals
    int k_min = 1;
    int k_max = 3;
    std::uint64_t seed = 1;
    bool run_enumerate = true;
    bool run_improve = true;
};

/**
 * Times the solvers on one generated game per k and returns CSV with
 * header n,k,edges,algorithm,seed,micros,work_units; work units are
 * permutations examined or improvement steps. Games depend only on the
 * spec, so repeated runs differ in the micros column alone.
 */
std::string run_bench(const BenchSpec& spec);

}  // namespace ssg

#endif
