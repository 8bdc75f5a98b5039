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

#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "ssg/chain.hpp"
#include "ssg/enumeration.hpp"
#include "ssg/oracle.hpp"
#include "ssg/regions.hpp"

using namespace ssg;
using ssgtest::fixture;
using ssgtest::id;
using ssgtest::q;

namespace {

/* Two coins chained so that only the order (r2, r1) can be live. */
const char* const kLopsided =
    "vertex m max\n"
    "vertex r1 random\n"
    "vertex r2 random\n"
    "vertex T target\n"
    "vertex B sink\n"
    "edge m r1\n"
    "edge r1 r2 p=1/2\n"
    "edge r1 T p=1/2\n"
    "edge r2 r1 p=1/2\n"
    "edge r2 B p=1/2\n";

}  // namespace

TEST_CASE("both minmax orders are live") {
    Game game = fixture(ssgtest::kMinmax);
    int r1 = id(game, "r1"), r2 = id(game, "r2");
    CHECK(check_liveness(game, compute_regions(game, Permutation{{r2, r1}})));
    CHECK(check_liveness(game, compute_regions(game, Permutation{{r1, r2}})));
}

TEST_CASE("liveness fails when a random vertex only feeds downward") {
    Game game = fixture(kLopsided);
    int r1 = id(game, "r1"), r2 = id(game, "r2");
    CHECK_FALSE(check_liveness(game, compute_regions(game, Permutation{{r1, r2}})));
    CHECK(check_liveness(game, compute_regions(game, Permutation{{r2, r1}})));
}

TEST_CASE("self-consistency means sorted values along the order") {
    Game game = fixture(ssgtest::kMinmax);
    int r1 = id(game, "r1"), r2 = id(game, "r2");
    Permutation good{{r2, r1}};
    Permutation bad{{r1, r2}};
    CHECK(check_self_consistency(good, permutation_values(game, good).values));
    CHECK_FALSE(check_self_consistency(bad, permutation_values(game, bad).values));
}

TEST_CASE("evaluate_permutation bundles both checks with the values") {
    Game game = fixture(ssgtest::kMinmax);
    int r1 = id(game, "r1"), r2 = id(game, "r2");
    PermutationVerdict accepted = evaluate_permutation(game, Permutation{{r2, r1}});
    CHECK(accepted.live);
    CHECK(accepted.self_consistent);
    CHECK(accepted.values[id(game, "m")] == q(1, 2));
    PermutationVerdict rejected = evaluate_permutation(game, Permutation{{r1, r2}});
    CHECK(rejected.live);
    CHECK_FALSE(rejected.self_consistent);
}

TEST_CASE("the zero guide already builds the accepted order on the minmax fixture") {
    Game game = fixture(ssgtest::kMinmax);
    Permutation f = build_live_permutation(game, Valuation(game.vertex_count(), q(0)));
    CHECK(f.order == std::vector<int>{id(game, "r2"), id(game, "r1")});
}

TEST_CASE("the optimal values as guide rebuild the accepted order") {
    Game game = fixture(ssgtest::kMinmax);
    Permutation f = build_live_permutation(game, brute_force_values(game));
    CHECK(f.order == std::vector<int>{id(game, "r2"), id(game, "r1")});
    CHECK(evaluate_permutation(game, f).self_consistent);
}

TEST_CASE("guide construction refuses games with an unreachable random vertex") {
    Game game = parse_game(
        "vertex r1 random\n"
        "vertex r2 random\n"
        "vertex T target\n"
        "vertex B sink\n"
        "edge r1 T p=1/2\n"
        "edge r1 r2 p=1/2\n"
        "edge r2 r2 p=1/2\n"
        "edge r2 B p=1/2\n");
    CHECK_THROWS_WITH_AS(build_live_permutation(game, Valuation(game.vertex_count(), q(0))),
                         "game is not normalized: no rank-1 pick can reach upward",
                         std::invalid_argument);
}

TEST_CASE("guide size is checked") {
    Game game = fixture(ssgtest::kCoin);
    CHECK_THROWS_WITH(build_live_permutation(game, Valuation{}),
                      doctest::Contains("guide must value every vertex"));
}

TEST_CASE("enumeration accepts the second order on the minmax fixture") {
    Game game = fixture(ssgtest::kMinmax);
    Solution solution = enumerate_solve(game);
    CHECK(solution.values[id(game, "m")] == q(1, 2));
    CHECK(solution.values[id(game, "u")] == q(1, 4));
    CHECK(solution.values[id(game, "r1")] == q(1, 2));
    CHECK(solution.values[id(game, "r2")] == q(1, 4));
    CHECK(solution.values[game.target()] == q(1));
    CHECK(solution.values[game.sink()] == q(0));
    CHECK(solution.max_strategy[id(game, "m")] == id(game, "r1"));
    CHECK(solution.min_strategy[id(game, "u")] == id(game, "r2"));
    CHECK(solution.permutation.order == std::vector<int>{id(game, "r2"), id(game, "r1")});
    CHECK(solution.stats.permutations_examined == 2);
}

TEST_CASE("enumeration picks the better coin on the choice fixture") {
    Game game = fixture(ssgtest::kChoice);
    Solution solution = enumerate_solve(game);
    CHECK(solution.values[id(game, "m")] == q(2, 3));
    CHECK(solution.values[id(game, "r1")] == q(1, 3));
    CHECK(solution.values[id(game, "r2")] == q(2, 3));
    CHECK(solution.max_strategy[id(game, "m")] == id(game, "r2"));
}

TEST_CASE("enumeration on the coin fixture is immediate") {
    Game game = fixture(ssgtest::kCoin);
    Solution solution = enumerate_solve(game);
    CHECK(solution.values[id(game, "r")] == q(1, 2));
    CHECK(solution.stats.permutations_examined == 1);
}

TEST_CASE("enumeration skips the non-live order on the lopsided fixture") {
    Game game = fixture(kLopsided);
    Solution solution = enumerate_solve(game);
    CHECK(solution.values[id(game, "m")] == q(2, 3));
    CHECK(solution.values[id(game, "r1")] == q(2, 3));
    CHECK(solution.values[id(game, "r2")] == q(1, 3));
    CHECK(solution.values == brute_force_values(game));
    CHECK(solution.permutation.order == std::vector<int>{id(game, "r2"), id(game, "r1")});
    CHECK(solution.stats.permutations_examined == 2);
}

TEST_CASE("solving a game that normalizes to nothing still lifts everything") {
    Game sure = fixture(ssgtest::kSure);
    Solution solution = enumerate_solve(sure);
    CHECK(solution.values[id(sure, "m")] == q(1));
    CHECK(solution.values[id(sure, "r")] == q(1));
    CHECK(solution.values[sure.sink()] == q(0));
    CHECK(solution.max_strategy[id(sure, "m")] == id(sure, "r"));
    CHECK(solution.permutation.order.empty());
    CHECK(solution.stats.permutations_examined == 1);

    Game dead = fixture(ssgtest::kDead);
    Solution zeroed = enumerate_solve(dead);
    CHECK(zeroed.values[id(dead, "m")] == q(0));
    CHECK(zeroed.values[id(dead, "u")] == q(0));
    CHECK(zeroed.values[id(dead, "r")] == q(1, 2));
    CHECK(zeroed.min_strategy[id(dead, "u")] == id(dead, "u"));
    CHECK(zeroed.max_strategy[id(dead, "m")] == id(dead, "u"));
    CHECK(zeroed.permutation.order == std::vector<int>{id(dead, "r")});
}
