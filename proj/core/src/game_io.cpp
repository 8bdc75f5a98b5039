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

#include "ssg/game_io.hpp"

#include <sstream>
#include <unordered_map>
#include <vector>

namespace ssg {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream stream(line);
    std::string token;
    while (stream >> token) {
        if (token[0] == '#') break;
        tokens.push_back(token);
    }
    return tokens;
}

VertexKind parse_kind(const std::string& word, int line) {
    if (word == "max") return VertexKind::Max;
    if (word == "min") return VertexKind::Min;
    if (word == "random") return VertexKind::Random;
    if (word == "target") return VertexKind::Target;
    if (word == "sink") return VertexKind::Sink;
    throw ParseError(line, "unknown vertex kind '" + word + "'");
}

Rational parse_probability(const std::string& token, int line) {
    if (token.rfind("p=", 0) != 0) throw ParseError(line, "expected p=<num>/<den>");
    std::string body = token.substr(2);
    auto slash = body.find('/');
    if (slash == std::string::npos) throw ParseError(line, "expected p=<num>/<den>");
    try {
        Rational p = parse_rational(body);
        return p;
    } catch (const std::invalid_argument& error) {
        throw ParseError(line, error.what());
    }
}

}  // namespace

Game parse_game(std::string_view text) {
    GameBuilder builder;
    std::unordered_map<std::string, int> index;
    std::unordered_map<std::string, VertexKind> kinds;

    auto resolve = [&](const std::string& name, int line) {
        auto it = index.find(name);
        if (it == index.end()) throw ParseError(line, "unknown vertex '" + name + "'");
        return it->second;
    };

    std::istringstream input{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(input, line)) {
        ++line_no;
        std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "vertex") {
            if (tokens.size() != 3) throw ParseError(line_no, "expected: vertex <name> <kind>");
            if (index.count(tokens[1]))
                throw ParseError(line_no, "vertex '" + tokens[1] + "' declared twice");
            VertexKind kind = parse_kind(tokens[2], line_no);
            index[tokens[1]] = builder.add_vertex(tokens[1], kind);
            kinds[tokens[1]] = kind;
        } else if (tokens[0] == "edge") {
            if (tokens.size() != 3 && tokens.size() != 4)
                throw ParseError(line_no, "expected: edge <from> <to> [p=<num>/<den>]");
            int from = resolve(tokens[1], line_no);
            int to = resolve(tokens[2], line_no);
            bool from_random = kinds[tokens[1]] == VertexKind::Random;
            if (from_random && tokens.size() != 4)
                throw ParseError(line_no, "random vertex edge missing probability");
            if (!from_random && tokens.size() == 4)
                throw ParseError(line_no, "probability on an edge from a non-random vertex");
            try {
                if (from_random)
                    builder.add_edge(from, to, parse_probability(tokens[3], line_no));
                else
                    builder.add_edge(from, to);
            } catch (const std::invalid_argument& error) {
                throw ParseError(line_no, error.what());
            }
        } else {
            throw ParseError(line_no, "unknown directive '" + tokens[0] + "'");
        }
    }
    Game game = builder.build();
    require_valid(game);
    return game;
}

std::string write_game(const Game& game) {
    std::string out;
    for (int v = 0; v < game.vertex_count(); ++v) {
        out += "vertex " + game.name(v) + " " + kind_name(game.kind(v)) + "\n";
    }
    for (int v = 0; v < game.vertex_count(); ++v) {
        if (game.kind(v) == VertexKind::Random) {
            for (const auto& [w, p] : game.distribution(v))
                out += "edge " + game.name(v) + " " + game.name(w) + " p=" + format_rational(p) +
                       "\n";
        } else {
            for (int w : game.successors(v))
                out += "edge " + game.name(v) + " " + game.name(w) + "\n";
        }
    }
    return out;
}

namespace {

void check_annotations(const Game& game, const DotAnnotations& a) {
    std::size_t n = static_cast<std::size_t>(game.vertex_count());
    if (a.values && a.values->size() != n)
        throw std::invalid_argument("value annotation references unknown vertex");
    if (a.regions && a.regions->rank.size() != n)
        throw std::invalid_argument("region annotation references unknown vertex");
    for (const PositionalStrategy* s : {a.max_strategy, a.min_strategy}) {
        if (!s) continue;
        if (s->size() != n) throw std::invalid_argument("strategy annotation references unknown vertex");
        for (int choice : *s)
            if (choice < -1 || choice >= game.vertex_count())
                throw std::invalid_argument("strategy annotation references unknown vertex");
    }
}

const char* shape_of(VertexKind kind) {
    switch (kind) {
        case VertexKind::Max: return "circle";
        case VertexKind::Min: return "square";
        case VertexKind::Random: return "triangle";
        case VertexKind::Target:
        case VertexKind::Sink: return "doublecircle";
    }
    return "circle";
}

}  // namespace

std::string export_dot(const Game& game, const DotAnnotations& annotations) {
    check_annotations(game, annotations);
    std::string out = "digraph game {\n  rankdir=LR;\n";
    for (int v = 0; v < game.vertex_count(); ++v) {
        std::string label = game.name(v);
        if (annotations.values) label += "\\n" + format_rational((*annotations.values)[v]);
        if (annotations.regions) label += "\\nW" + std::to_string(annotations.regions->rank[v]);
        out += "  \"" + game.name(v) + "\" [shape=" + shape_of(game.kind(v)) + ", label=\"" +
               label + "\"];\n";
    }
    for (int v = 0; v < game.vertex_count(); ++v) {
        for (int w : game.successors(v)) {
            std::string attrs;
            if (game.kind(v) == VertexKind::Random) {
                for (const auto& [u, p] : game.distribution(v))
                    if (u == w) attrs = "label=\"" + format_rational(p) + "\"";
            }
            bool max_pick = annotations.max_strategy && (*annotations.max_strategy)[v] == w;
            bool min_pick = annotations.min_strategy && (*annotations.min_strategy)[v] == w;
            if (max_pick || min_pick) {
                if (!attrs.empty()) attrs += ", ";
                attrs += std::string("color=") + (max_pick ? "\"red\"" : "\"blue\"") +
                         ", penwidth=2.0";
            }
            out += "  \"" + game.name(v) + "\" -> \"" + game.name(w) + "\"";
            if (!attrs.empty()) out += " [" + attrs + "]";
            out += ";\n";
        }
    }
    out += "}\n";
    return out;
}

}  // namespace ssg
