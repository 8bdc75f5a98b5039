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

#ifndef SSG_GENERATE_HPP
#define SSG_GENERATE_HPP

#include <cstdint>

#include "ssg/game.hpp"

namespace ssg {

/**
 * Shape of a random game. Generation is a pure function of the spec: the
 * same seed always yields the same game, byte for byte after write_game.
 */
struct GenSpec {
    int max_count = 0;
    int min_count = 0;
    int random_count = 0;
    int out_degree_min = 1;
    int out_degree_max = 3;
    long max_denominator = 4;   // bound on every probability denominator
    int terminal_edge_percent = 25;  // chance per vertex of wiring a terminal in
    std::uint64_t seed = 0;
};

/**
 * Builds a valid game with named vertices m0.., u0.., r0.., target T and
 * sink B. Controlled and random vertices get distinct successors within
 * the degree range; random distributions are exact with denominators up to
 * max_denominator; at least one edge into the target is guaranteed when any
 * non-terminal vertex exists. Throws std::invalid_argument when the spec
 * cannot be met (degree range larger than the vertex count or above the
 * denominator bound).
 */
Game generate_game(const GenSpec& spec);

}  // namespace ssg

#endif
