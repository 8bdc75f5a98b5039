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

#ifndef SSG_GAME_IO_HPP
#define SSG_GAME_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "ssg/game.hpp"
#include "ssg/regions.hpp"

namespace ssg {

/** Syntax error in the game text format; message starts with "line N:". */
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& message);
    int line() const { return line_; }

  private:
    int line_;
};

/**
 * Reads the line-based text format:
 *
 *   # comment
 *   vertex <name> max|min|random|target|sink
 *   edge <from> <to> [p=<num>/<den>]
 *
 * Probabilities are required exactly on edges leaving random vertices.
 * The result is validated; semantic violations are reported as
 * std::invalid_argument via require_valid.
 */
Game parse_game(std::string_view text);

/**
 * Canonical serialization: vertex lines in index order, then edge lines
 * grouped by source in index order with successors ascending, probabilities
 * in lowest terms. parse_game(write_game(g)) == g.
 */
std::string write_game(const Game& game);

/** Optional overlays for export_dot; pointers are borrowed for the call. */
struct DotAnnotations {
    const Valuation* values = nullptr;
    const PositionalStrategy* max_strategy = nullptr;
    const PositionalStrategy* min_strategy = nullptr;
    const RegionPartition* regions = nullptr;
};

/**
 * Graphviz rendering: Max circles, Min squares, random triangles, terminals
 * double-circled; probability-labelled edges; strategy edges highlighted;
 * values and region ranks appended to labels when provided.
 * Throws std::invalid_argument if an annotation does not fit the game.
 */
std::string export_dot(const Game& game, const DotAnnotations& annotations = {});

}  // namespace ssg

#endif
