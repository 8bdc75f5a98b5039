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

#ifndef SSG_GAME_HPP
#define SSG_GAME_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ssg/rational.hpp"

namespace ssg {

enum class VertexKind { Max, Min, Random, Target, Sink };

/** Keyword used in the text format and in reports ("max", "min", ...). */
const char* kind_name(VertexKind kind);

struct Vertex {
    std::string name;
    VertexKind kind;
};

/**
 * A simple stochastic game: Max and Min vertices choose a successor edge,
 * random vertices move by an exact probability distribution over their
 * successors, and play is evaluated by the probability of reaching the
 * target vertex. Immutable once built; see GameBuilder.
 */
class Game {
  public:
    Game() = default;

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    const Vertex& vertex(int v) const { return vertices_[v]; }
    VertexKind kind(int v) const { return vertices_[v].kind; }
    const std::string& name(int v) const { return vertices_[v].name; }

    /** Successor indices, sorted ascending. */
    std::span<const int> successors(int v) const { return succ_[v]; }
    std::span<const int> predecessors(int v) const { return pred_[v]; }
    int out_degree(int v) const { return static_cast<int>(succ_[v].size()); }
    int edge_count() const { return edge_count_; }

    /** Distribution of a random vertex as (successor, probability), sorted by successor. */
    const std::vector<std::pair<int, Rational>>& distribution(int v) const { return dist_[v]; }

    bool has_edge(int v, int w) const;

    /** Index of the first Target/Sink vertex, -1 if absent. */
    int target() const { return target_; }
    int sink() const { return sink_; }

    /** Vertex index by display name, -1 if unknown. */
    int find(std::string_view name) const;

    std::vector<int> vertices_of(VertexKind kind) const;
    int count_of(VertexKind kind) const;
    bool is_controlled(int v) const {
        return vertices_[v].kind == VertexKind::Max || vertices_[v].kind == VertexKind::Min;
    }

    bool operator==(const Game& other) const;

  private:
    friend class GameBuilder;

    std::vector<Vertex> vertices_;
    std::vector<std::vector<int>> succ_;
    std::vector<std::vector<int>> pred_;
    std::vector<std::vector<std::pair<int, Rational>>> dist_;
    std::unordered_map<std::string, int> by_name_;
    int edge_count_ = 0;
    int target_ = -1;
    int sink_ = -1;
};

/**
 * Incremental construction. The builder enforces only structural sanity
 * (known indices, unique names, no duplicate edges); semantic rules such
 * as distribution sums are left to validate_game so that invalid games
 * can be built and reported on.
 */
class GameBuilder {
  public:
    /** Returns the index of the new vertex. Throws on duplicate name. */
    int add_vertex(std::string name, VertexKind kind);

    /** Edge from a controlled or terminal-free vertex. Throws on duplicates or bad indices. */
    void add_edge(int from, int to);

    /** Probability-carrying edge from a random vertex. */
    void add_edge(int from, int to, Rational probability);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    VertexKind kind(int v) const { return vertices_[v].kind; }

    Game build();

  private:
    std::vector<Vertex> vertices_;
    std::vector<std::vector<std::pair<int, std::optional<Rational>>>> edges_;
    std::unordered_map<std::string, int> by_name_;
};

struct ValidationIssue {
    int vertex;  // -1 for game-wide issues
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string to_string(const Game& game) const;
};

/**
 * Checks the game model rules: exactly one target, at most one sink,
 * terminals without outgoing edges, controlled and random vertices with
 * out-degree at least one, and random distributions that cover exactly
 * the successor set with positive probabilities summing to one.
 */
ValidationReport validate_game(const Game& game);

/** Throws std::invalid_argument carrying the report text if the game is invalid. */
void require_valid(const Game& game);

/** Exact value (or probability) per vertex, indexed by vertex. */
using Valuation = std::vector<Rational>;

/**
 * Deterministic memoryless strategy: choice[v] is the chosen successor for
 * every vertex of one player, -1 elsewhere.
 */
using PositionalStrategy = std::vector<int>;

/** True iff the strategy picks an existing edge for exactly the vertices of `kind`. */
bool strategy_total_for(const Game& game, VertexKind kind, const PositionalStrategy& strategy);

/**
 * An ordering of the random vertices: order[i] is the vertex of rank i+1.
 * Rank 0 is implicitly the sink and rank k+1 the target.
 */
struct Permutation {
    std::vector<int> order;

    int size() const { return static_cast<int>(order.size()); }
    bool operator==(const Permutation& other) const { return order == other.order; }
    bool operator<(const Permutation& other) const { return order < other.order; }
};

struct SolveStats {
    long long permutations_examined = -1;
    long long improvement_steps = -1;
    long long pairs_examined = -1;
};

/** Exact optimal values with optimal positional strategies for both players. */
struct Solution {
    Valuation values;
    PositionalStrategy max_strategy;
    PositionalStrategy min_strategy;
    Permutation permutation;  // accepted ordering, in original vertex ids; empty for oracle solves
    SolveStats stats;
};

}  // namespace ssg

#endif
