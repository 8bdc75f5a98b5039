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
#include <sstream>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "ssg/enumeration.hpp"
#include "ssg/game_io.hpp"

using namespace ssg;
using ssgtest::fixture;
using ssgtest::id;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(SSG_TEST_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

}  // namespace

TEST_CASE("fixture file parses to the expected shape") {
    Game game = fixture(ssgtest::kCoin);
    CHECK(game.vertex_count() == 3);
    CHECK(game.count_of(VertexKind::Random) == 1);
}

TEST_CASE("write after parse reproduces the canonical text") {
    CHECK(write_game(fixture(ssgtest::kCoin)) == ssgtest::kCoin);
    CHECK(write_game(fixture(ssgtest::kMinmax)) == ssgtest::kMinmax);
    CHECK(write_game(fixture(ssgtest::kSure)) == ssgtest::kSure);
}

TEST_CASE("data files match the in-source fixtures") {
    CHECK(slurp("coin.ssg") == ssgtest::kCoin);
    CHECK(slurp("choice.ssg") == ssgtest::kChoice);
    CHECK(slurp("minmax.ssg") == ssgtest::kMinmax);
    CHECK(slurp("sure.ssg") == ssgtest::kSure);
    CHECK(slurp("dead.ssg") == ssgtest::kDead);
}

TEST_CASE("comments and blank lines are ignored") {
    Game game = parse_game(
        "# a coin\n"
        "\n"
        "vertex r random   # the flip\n"
        "vertex T target\n"
        "vertex B sink\n"
        "edge r T p=1/2\n"
        "edge r B p=1/2\n");
    CHECK(game == fixture(ssgtest::kCoin));
}

TEST_CASE("parse errors cite their line") {
    CHECK_THROWS_WITH_AS(parse_game("vertex r coin\n"),
                         "line 1: unknown vertex kind 'coin'", ParseError);
    CHECK_THROWS_WITH_AS(parse_game("vertex r random\nvertex r random\n"),
                         "line 2: vertex 'r' declared twice", ParseError);
    CHECK_THROWS_WITH_AS(parse_game("vertex r random\nedge r X p=1/2\n"),
                         "line 2: unknown vertex 'X'", ParseError);
    CHECK_THROWS_WITH_AS(parse_game("vertex r random\n\nedge r\n"),
                         "line 3: expected: edge <from> <to> [p=<num>/<den>]", ParseError);
    CHECK_THROWS_WITH_AS(parse_game("vertex r\n"), "line 1: expected: vertex <name> <kind>",
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_game("loop r\n"), "line 1: unknown directive 'loop'", ParseError);
    CHECK_THROWS_WITH(parse_game(slurp("bad_prob.ssg")),
                      doctest::Contains("line 5: rational with zero denominator"));
}

TEST_CASE("probability placement is enforced by kind") {
    CHECK_THROWS_WITH(parse_game("vertex r random\nvertex T target\nedge r T\n"),
                      doctest::Contains("random vertex edge missing probability"));
    CHECK_THROWS_WITH(parse_game("vertex m max\nvertex T target\nedge m T p=1/2\n"),
                      doctest::Contains("probability on an edge from a non-random vertex"));
    CHECK_THROWS_WITH(parse_game("vertex r random\nvertex T target\nedge r T 1/2\n"),
                      doctest::Contains("line 3"));
}

TEST_CASE("invalid games are rejected at parse time with the offender named") {
    CHECK_THROWS_WITH(parse_game("vertex r random\nvertex T target\nvertex B sink\n"
                                 "edge r T p=1/2\nedge r B p=1/3\n"),
                      doctest::Contains("sums to 5/6"));
}

TEST_CASE("plain dot export shows shapes and probability labels") {
    std::string dot = export_dot(fixture(ssgtest::kCoin));
    CHECK(dot.find("\"r\" [shape=triangle") != std::string::npos);
    CHECK(dot.find("\"T\" [shape=doublecircle") != std::string::npos);
    CHECK(dot.find("\"B\" [shape=doublecircle") != std::string::npos);
    CHECK(dot.find("\"r\" -> \"T\" [label=\"1/2\"]") != std::string::npos);
    CHECK(dot.find("\"r\" -> \"B\" [label=\"1/2\"]") != std::string::npos);
}

TEST_CASE("annotated dot export highlights the strategy edges") {
    Game game = fixture(ssgtest::kMinmax);
    Solution solution = enumerate_solve(game);
    DotAnnotations notes;
    notes.values = &solution.values;
    notes.max_strategy = &solution.max_strategy;
    notes.min_strategy = &solution.min_strategy;
    std::string dot = export_dot(game, notes);
    CHECK(dot.find("\"m\" -> \"r1\" [color=\"red\", penwidth=2.0]") != std::string::npos);
    CHECK(dot.find("\"u\" -> \"r2\" [color=\"blue\", penwidth=2.0]") != std::string::npos);
    CHECK(dot.find("label=\"m\\n1/2\"") != std::string::npos);
    CHECK(dot.find("label=\"u\\n1/4\"") != std::string::npos);
}

TEST_CASE("annotations referencing unknown vertices are rejected") {
    Game game = fixture(ssgtest::kCoin);
    PositionalStrategy stray(game.vertex_count(), -1);
    stray[id(game, "r")] = 99;
    DotAnnotations notes;
    notes.max_strategy = &stray;
    CHECK_THROWS_WITH(export_dot(game, notes), doctest::Contains("unknown vertex"));
}
