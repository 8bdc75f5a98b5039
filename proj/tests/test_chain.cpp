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
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "ssg/chain.hpp"
#include "ssg/regions.hpp"

using namespace ssg;
using ssgtest::fixture;
using ssgtest::id;
using ssgtest::q;

TEST_CASE("embedded chain of the minmax fixture, low coin first") {
    Game game = fixture(ssgtest::kMinmax);
    Permutation f{{id(game, "r2"), id(game, "r1")}};
    EmbeddedChain chain = embed_chain(game, compute_regions(game, f));
    REQUIRE(chain.size() == 4);
    CHECK(chain.p[0] == std::vector<Rational>{q(1), q(0), q(0), q(0)});
    CHECK(chain.p[1] == std::vector<Rational>{q(3, 4), q(0), q(0), q(1, 4)});
    CHECK(chain.p[2] == std::vector<Rational>{q(1, 2), q(0), q(0), q(1, 2)});
    CHECK(chain.p[3] == std::vector<Rational>{q(0), q(0), q(0), q(1)});
}

TEST_CASE("embedded chain of the coin fixture") {
    Game game = fixture(ssgtest::kCoin);
    EmbeddedChain chain = embed_chain(game, compute_regions(game, Permutation{{id(game, "r")}}));
    REQUIRE(chain.size() == 3);
    CHECK(chain.p[1] == std::vector<Rational>{q(1, 2), q(0), q(1, 2)});
}

TEST_CASE("embedded chain of the choice fixture") {
    Game game = fixture(ssgtest::kChoice);
    Permutation f{{id(game, "r1"), id(game, "r2")}};
    EmbeddedChain chain = embed_chain(game, compute_regions(game, f));
    CHECK(chain.p[1] == std::vector<Rational>{q(2, 3), q(0), q(0), q(1, 3)});
    CHECK(chain.p[2] == std::vector<Rational>{q(1, 3), q(0), q(0), q(2, 3)});
}

TEST_CASE("chain solve of the minmax fixture") {
    Game game = fixture(ssgtest::kMinmax);
    Permutation f{{id(game, "r2"), id(game, "r1")}};
    ChainValues values = solve_chain(embed_chain(game, compute_regions(game, f)));
    CHECK(values.x == std::vector<Rational>{q(0), q(1, 4), q(1, 2), q(1)});
    CHECK(values.reachable == std::vector<bool>{false, true, true, true});
}

TEST_CASE("permutation values spread the chain solution over the regions") {
    Game game = fixture(ssgtest::kMinmax);
    int m = id(game, "m"), u = id(game, "u"), r1 = id(game, "r1"), r2 = id(game, "r2");

    PermutationValues low_first = permutation_values(game, Permutation{{r2, r1}});
    CHECK(low_first.values[m] == q(1, 2));
    CHECK(low_first.values[r1] == q(1, 2));
    CHECK(low_first.values[u] == q(1, 4));
    CHECK(low_first.values[r2] == q(1, 4));
    CHECK(low_first.values[game.target()] == q(1));
    CHECK(low_first.values[game.sink()] == q(0));

    PermutationValues high_first = permutation_values(game, Permutation{{r1, r2}});
    CHECK(high_first.values[r1] == q(1, 2));
    CHECK(high_first.values[m] == q(1, 2));
    CHECK(high_first.values[u] == q(1, 2));
    CHECK(high_first.values[r2] == q(1, 4));
}

TEST_CASE("permutation values of the coin fixture") {
    Game game = fixture(ssgtest::kCoin);
    PermutationValues pv = permutation_values(game, Permutation{{id(game, "r")}});
    CHECK(pv.values[id(game, "r")] == q(1, 2));
}

TEST_CASE("gambler's ruin solves to i over k plus one") {
    for (int k = 1; k <= 8; ++k) {
        CAPTURE(k);
        SparseChain chain;
        chain.rows.resize(k + 2);
        chain.target = k + 1;
        for (int i = 1; i <= k; ++i) {
            chain.rows[i].emplace_back(i - 1, q(1, 2));
            chain.rows[i].emplace_back(i + 1, q(1, 2));
        }
        std::vector<Rational> x = solve_reach_values(chain);
        for (int i = 0; i <= k + 1; ++i) CHECK(x[i] == q(i, k + 1));
        /* Exact residual: every middle state satisfies its own equation. */
        for (int i = 1; i <= k; ++i) CHECK(x[i] == q(1, 2) * x[i - 1] + q(1, 2) * x[i + 1]);
    }
}

TEST_CASE("forwarding states are compressed onto their destination") {
    SparseChain chain;
    chain.rows.resize(4);
    chain.target = 0;
    chain.rows[1].emplace_back(2, q(1));
    chain.rows[2].emplace_back(0, q(1));
    chain.rows[3].emplace_back(1, q(1, 2));
    chain.rows[3].emplace_back(2, q(1, 2));
    std::vector<Rational> x = solve_reach_values(chain);
    CHECK(x == std::vector<Rational>{q(1), q(1), q(1), q(1)});
}

TEST_CASE("a deterministic cycle is dead and scores zero") {
    SparseChain chain;
    chain.rows.resize(4);
    chain.target = 0;
    chain.rows[1].emplace_back(2, q(1));
    chain.rows[2].emplace_back(1, q(1));
    chain.rows[3].emplace_back(0, q(1, 3));
    chain.rows[3].emplace_back(1, q(2, 3));
    std::vector<Rational> x = solve_reach_values(chain);
    CHECK(x == std::vector<Rational>{q(1), q(0), q(0), q(1, 3)});
}

TEST_CASE("states that cannot reach the target score zero") {
    SparseChain chain;
    chain.rows.resize(3);
    chain.target = 0;
    chain.rows[1].emplace_back(1, q(1, 2));
    chain.rows[1].emplace_back(2, q(1, 2));
    chain.rows[2].emplace_back(1, q(1, 2));
    chain.rows[2].emplace_back(2, q(1, 2));
    std::vector<Rational> x = solve_reach_values(chain);
    CHECK(x == std::vector<Rational>{q(1), q(0), q(0)});
}

TEST_CASE("malformed chains are rejected") {
    SparseChain off_target;
    off_target.rows.resize(2);
    off_target.target = 5;
    CHECK_THROWS_WITH_AS(solve_reach_values(off_target), "chain target out of range",
                         std::invalid_argument);

    SparseChain short_row;
    short_row.rows.resize(2);
    short_row.target = 0;
    short_row.rows[1].emplace_back(0, q(1, 2));
    CHECK_THROWS_WITH_AS(solve_reach_values(short_row), "chain row does not sum to 1",
                         std::invalid_argument);

    SparseChain stray;
    stray.rows.resize(2);
    stray.target = 0;
    stray.rows[1].emplace_back(7, q(1));
    CHECK_THROWS_WITH_AS(solve_reach_values(stray), "malformed chain row", std::invalid_argument);
}
