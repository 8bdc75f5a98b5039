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

#include "ssg/game.hpp"

#include <algorithm>
#include <stdexcept>

namespace ssg {

const char* kind_name(VertexKind kind) {
    switch (kind) {
        case VertexKind::Max: return "max";
        case VertexKind::Min: return "min";
        case VertexKind::Random: return "random";
        case VertexKind::Target: return "target";
        case VertexKind::Sink: return "sink";
    }
    return "?";
}

bool Game::has_edge(int v, int w) const {
    return std::binary_search(succ_[v].begin(), succ_[v].end(), w);
}

int Game::find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    return it == by_name_.end() ? -1 : it->second;
}

std::vector<int> Game::vertices_of(VertexKind kind) const {
    std::vector<int> result;
    for (int v = 0; v < vertex_count(); ++v)
        if (vertices_[v].kind == kind) result.push_back(v);
    return result;
}

int Game::count_of(VertexKind kind) const {
    int n = 0;
    for (const Vertex& vertex : vertices_)
        if (vertex.kind == kind) ++n;
    return n;
}

bool Game::operator==(const Game& other) const {
    if (vertex_count() != other.vertex_count()) return false;
    for (int v = 0; v < vertex_count(); ++v) {
        if (vertices_[v].name != other.vertices_[v].name) return false;
        if (vertices_[v].kind != other.vertices_[v].kind) return false;
        if (succ_[v] != other.succ_[v]) return false;
        if (dist_[v] != other.dist_[v]) return false;
    }
    return true;
}

int GameBuilder::add_vertex(std::string name, VertexKind kind) {
    if (by_name_.count(name)) throw std::invalid_argument("duplicate vertex name '" + name + "'");
    int index = static_cast<int>(vertices_.size());
    by_name_.emplace(name, index);
    vertices_.push_back(Vertex{std::move(name), kind});
    edges_.emplace_back();
    return index;
}

void GameBuilder::add_edge(int from, int to) {
    if (from < 0 || from >= vertex_count() || to < 0 || to >= vertex_count())
        throw std::invalid_argument("edge endpoint out of range");
    for (const auto& [existing, prob] : edges_[from])
        if (existing == to) throw std::invalid_argument("duplicate edge");
    edges_[from].emplace_back(to, std::nullopt);
}

void GameBuilder::add_edge(int from, int to, Rational probability) {
    if (from < 0 || from >= vertex_count() || to < 0 || to >= vertex_count())
        throw std::invalid_argument("edge endpoint out of range");
    if (vertices_[from].kind != VertexKind::Random)
        throw std::invalid_argument("probability on an edge from a non-random vertex");
    for (const auto& [existing, prob] : edges_[from])
        if (existing == to) throw std::invalid_argument("duplicate edge");
    edges_[from].emplace_back(to, std::move(probability));
}

Game GameBuilder::build() {
    Game game;
    game.vertices_ = vertices_;
    game.by_name_ = by_name_;
    int n = vertex_count();
    game.succ_.resize(n);
    game.pred_.resize(n);
    game.dist_.resize(n);
    for (int v = 0; v < n; ++v) {
        auto& edges = edges_[v];
        std::sort(edges.begin(), edges.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [to, prob] : edges) {
            game.succ_[v].push_back(to);
            if (prob) game.dist_[v].emplace_back(to, *prob);
        }
        game.edge_count_ += static_cast<int>(edges.size());
    }
    for (int v = 0; v < n; ++v)
        for (int w : game.succ_[v]) game.pred_[w].push_back(v);
    for (int v = 0; v < n; ++v) {
        if (game.vertices_[v].kind == VertexKind::Target && game.target_ < 0) game.target_ = v;
        if (game.vertices_[v].kind == VertexKind::Sink && game.sink_ < 0) game.sink_ = v;
    }
    return game;
}

std::string ValidationReport::to_string(const Game& game) const {
    std::string text;
    for (const ValidationIssue& issue : issues) {
        if (!text.empty()) text += "\n";
        if (issue.vertex >= 0) text += game.name(issue.vertex) + ": ";
        text += issue.message;
    }
    return text;
}

ValidationReport validate_game(const Game& game) {
    ValidationReport report;
    auto flag = [&](int v, std::string message) {
        report.issues.push_back(ValidationIssue{v, std::move(message)});
    };

    int targets = game.count_of(VertexKind::Target);
    int sinks = game.count_of(VertexKind::Sink);
    if (targets != 1)
        flag(-1, "expected exactly one target vertex, found " + std::to_string(targets));
    if (sinks > 1) flag(-1, "expected at most one sink vertex, found " + std::to_string(sinks));

    for (int v = 0; v < game.vertex_count(); ++v) {
        switch (game.kind(v)) {
            case VertexKind::Target:
            case VertexKind::Sink:
                if (game.out_degree(v) > 0) flag(v, "terminal vertex has outgoing edges");
                break;
            case VertexKind::Max:
            case VertexKind::Min:
                if (game.out_degree(v) == 0) flag(v, "controlled vertex has out-degree 0");
                break;
            case VertexKind::Random: {
                if (game.out_degree(v) == 0) {
                    flag(v, "random vertex has out-degree 0");
                    break;
                }
                const auto& dist = game.distribution(v);
                if (static_cast<int>(dist.size()) != game.out_degree(v)) {
                    flag(v, "random vertex has an edge without probability");
                    break;
                }
                Rational sum(0);
                bool positive = true;
                for (const auto& [w, p] : dist) {
                    if (p <= 0) positive = false;
                    sum += p;
                }
                if (!positive) flag(v, "distribution has a probability <= 0");
                if (sum != 1)
                    flag(v, "distribution sums to " + format_rational(sum) + " != 1");
                break;
            }
        }
    }
    return report;
}

void require_valid(const Game& game) {
    ValidationReport report = validate_game(game);
    if (!report.ok()) throw std::invalid_argument("invalid game: " + report.to_string(game));
}

bool strategy_total_for(const Game& game, VertexKind kind, const PositionalStrategy& strategy) {
    if (strategy.size() != static_cast<std::size_t>(game.vertex_count())) return false;
    for (int v = 0; v < game.vertex_count(); ++v) {
        if (game.kind(v) == kind) {
            if (strategy[v] < 0 || !game.has_edge(v, strategy[v])) return false;
        } else if (strategy[v] != -1) {
            return false;
        }
    }
    return true;
}

}  // namespace ssg
