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

#ifndef SSG_TESTS_FIXTURES_HPP
#define SSG_TESTS_FIXTURES_HPP

#include <span>
#include <string>
#include <vector>

#include "ssg/game_io.hpp"
#include "ssg/rational.hpp"

namespace ssgtest {

/* Fixture texts are canonical: write_game(parse_game(text)) == text. */

/* One coin flip between the terminals. */
inline const char* const kCoin =
    "vertex r random\n"
    "vertex T target\n"
    "vertex B sink\n"
    "edge r T p=1/2\n"
    "edge r B p=1/2\n";

/* Max picks between a 1/3 coin and a 2/3 coin. */
inline const char* const kChoice =
    "vertex m max\n"
    "vertex r1 random\n"
    "vertex r2 random\n"
    "vertex T target\n"
    "vertex B sink\n"
    "edge m r1\n"
    "edge m r2\n"
    "edge r1 T p=1/3\n"
    "edge r1 B p=2/3\n"
    "edge r2 T p=2/3\n"
    "edge r2 B p=1/3\n";

/* Max can hand the move to Min or take the fair coin himself. */
inline const char* const kMinmax =
    "vertex m max\n"
    "vertex u min\n"
    "vertex r1 random\n"
    "vertex r2 random\n"
    "vertex T target\n"
    "vertex B sink\n"
    "edge m u\n"
    "edge m r1\n"
    "edge u r1\n"
    "edge u r2\n"
    "edge r1 T p=1/2\n"
    "edge r1 B p=1/2\n"
    "edge r2 T p=1/4\n"
    "edge r2 B p=3/4\n";

/* The coin retries itself, so everything wins almost surely. */
inline const char* const kSure =
    "vertex m max\n"
    "vertex r random\n"
    "vertex T target\n"
    "vertex B sink\n"
    "edge m r\n"
    "edge r r p=1/2\n"
    "edge r T p=1/2\n";

/* Min can loop forever, so the controlled prefix has value zero. */
inline const char* const kDead =
    "vertex m max\n"
    "vertex u min\n"
    "vertex r random\n"
    "vertex T target\n"
    "vertex B sink\n"
    "edge m u\n"
    "edge u u\n"
    "edge u r\n"
    "edge r T p=1/2\n"
    "edge r B p=1/2\n";

inline ssg::Game fixture(const char* text) { return ssg::parse_game(text); }

inline ssg::Rational q(long num, long den = 1) { return ssg::rational(num, den); }

/* Vertex id by name; fixtures only use names that exist. */
inline int id(const ssg::Game& game, const std::string& name) { return game.find(name); }

/** Owned copy of a successor span, for comparisons against literals. */
inline std::vector<int> vec(std::span<const int> span) { return {span.begin(), span.end()}; }

}  // namespace ssgtest

#endif
