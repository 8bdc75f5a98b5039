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

#include "ssg/qualitative.hpp"

#include <cassert>
#include <stdexcept>

namespace ssg {

PositiveValueResult positive_value_set(const Game& game) {
    int n = game.vertex_count();
    PositiveValueResult result;
    result.positive.assign(n, false);
    result.min_safety.assign(n, -1);

    // Positive reachability: one witness successor suffices for Max and for
    // random vertices (all probabilities are positive), Min needs them all.
    std::vector<int> pending(n, 0);
    for (int v = 0; v < n; ++v)
        pending[v] = game.kind(v) == VertexKind::Min ? game.out_degree(v) : 1;

    std::vector<int> queue;
    queue.reserve(n);
    result.positive[game.target()] = true;
    queue.push_back(game.target());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int w = queue[head];
        for (int v : game.predecessors(w)) {
            if (result.positive[v] || --pending[v] > 0) continue;
            result.positive[v] = true;
            queue.push_back(v);
        }
    }

    for (int v = 0; v < n; ++v) {
        if (game.kind(v) != VertexKind::Min || result.positive[v]) continue;
        for (int w : game.successors(v)) {
            if (!result.positive[w]) {
                result.min_safety[v] = w;
                break;
            }
        }
        assert(result.min_safety[v] != -1);
    }
    return result;
}

namespace {

/*
 * Removes vertices that cannot even stay inside the candidate set: Min and
 * random vertices with an escaping successor, Max vertices with nothing else.
 */
void close_under_exits(const Game& game, std::vector<bool>& in) {
    int n = game.vertex_count();
    std::vector<int> inside_succ(n, 0);
    std::vector<int> stack;
    for (int v = 0; v < n; ++v) {
        if (!in[v] || !(game.is_controlled(v) || game.kind(v) == VertexKind::Random)) continue;
        for (int w : game.successors(v)) inside_succ[v] += in[w];
        bool leaves = game.kind(v) == VertexKind::Max ? inside_succ[v] == 0
                                                      : inside_succ[v] < game.out_degree(v);
        if (leaves) {
            in[v] = false;
            stack.push_back(v);
        }
    }
    while (!stack.empty()) {
        int w = stack.back();
        stack.pop_back();
        for (int v : game.predecessors(w)) {
            if (!in[v]) continue;
            if (game.kind(v) == VertexKind::Max) {
                if (--inside_succ[v] > 0) continue;
            } else if (!(game.kind(v) == VertexKind::Min || game.kind(v) == VertexKind::Random)) {
                continue;
            }
            in[v] = false;
            stack.push_back(v);
        }
    }
}

struct ReachWithin {
    std::vector<bool> z;
    std::vector<int> level;
};

/* Positive reachability of the target inside a closed candidate set. */
ReachWithin positive_reach_within(const Game& game, const std::vector<bool>& in) {
    int n = game.vertex_count();
    ReachWithin r;
    r.z.assign(n, false);
    r.level.assign(n, -1);
    std::vector<int> pending(n, 0);
    for (int v = 0; v < n; ++v) {
        if (!in[v]) continue;
        if (game.kind(v) == VertexKind::Min) {
            for (int w : game.successors(v)) pending[v] += in[w];
        } else {
            pending[v] = 1;
        }
    }
    std::vector<int> queue;
    r.z[game.target()] = true;
    r.level[game.target()] = 0;
    queue.push_back(game.target());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int w = queue[head];
        for (int v : game.predecessors(w)) {
            if (!in[v] || r.z[v] || --pending[v] > 0) continue;
            r.z[v] = true;
            r.level[v] = r.level[w] + 1;
            queue.push_back(v);
        }
    }
    return r;
}

}  // namespace

AlmostSureResult almost_sure_set(const Game& game) {
    int n = game.vertex_count();
    AlmostSureResult result;
    result.almost_sure.assign(n, true);
    result.max_strategy.assign(n, -1);

    // Shrink the candidate set until it is exit-free and the target stays
    // positively reachable from all of it; then Max's reach strategy wins
    // almost surely because every loop keeps retrying a positive escape.
    ReachWithin reach;
    while (true) {
        close_under_exits(game, result.almost_sure);
        reach = positive_reach_within(game, result.almost_sure);
        bool changed = false;
        for (int v = 0; v < n; ++v) {
            if (result.almost_sure[v] && !reach.z[v]) {
                result.almost_sure[v] = false;
                changed = true;
            }
        }
        if (!changed) break;
    }

    for (int v = 0; v < n; ++v) {
        if (game.kind(v) != VertexKind::Max || !result.almost_sure[v]) continue;
        for (int w : game.successors(v)) {
            if (reach.z[w] && reach.level[w] < reach.level[v]) {
                result.max_strategy[v] = w;
                break;
            }
        }
        assert(result.max_strategy[v] != -1);
    }
    return result;
}

namespace {

/* Picks a sink name not clashing with any vertex of the original game. */
std::string fresh_sink_name(const Game& game) {
    std::string name = "bot";
    while (game.find(name) != -1) name += "_";
    return name;
}

}  // namespace

NormalizationMap normalize_game(const Game& game) {
    int n = game.vertex_count();
    AlmostSureResult one = almost_sure_set(game);
    PositiveValueResult pos = positive_value_set(game);

    NormalizationMap map;
    map.vertex_map.assign(n, -1);
    map.value1_strategy = one.max_strategy;
    map.value0_strategy.assign(n, -1);

    GameBuilder builder;
    map.preimage.clear();
    for (int v = 0; v < n; ++v) {
        if (one.almost_sure[v] && v != game.target()) {
            map.vertex_map[v] = NormalizationMap::kToTarget;
        } else if (!pos.positive[v] && v != game.sink()) {
            map.vertex_map[v] = NormalizationMap::kToSink;
            if (game.kind(v) == VertexKind::Min) map.value0_strategy[v] = pos.min_safety[v];
        } else {
            map.vertex_map[v] = builder.add_vertex(game.name(v), game.kind(v));
            map.preimage.push_back(v);
        }
    }
    if (game.sink() == -1) {
        builder.add_vertex(fresh_sink_name(game), VertexKind::Sink);
        map.preimage.push_back(-1);
    }

    int image_target = map.vertex_map[game.target()];
    int image_sink = game.sink() != -1 ? map.vertex_map[game.sink()]
                                       : static_cast<int>(map.preimage.size()) - 1;
    auto image_of = [&](int w) {
        if (map.vertex_map[w] == NormalizationMap::kToTarget) return image_target;
        if (map.vertex_map[w] == NormalizationMap::kToSink) return image_sink;
        return map.vertex_map[w];
    };

    // Merging can alias several successors to one class, so controlled edges
    // are deduplicated and random mass is summed per class.
    int m = builder.vertex_count();
    for (int v = 0; v < n; ++v) {
        if (map.vertex_map[v] < 0) continue;
        int iv = map.vertex_map[v];
        if (game.kind(v) == VertexKind::Random) {
            std::vector<Rational> mass(m, Rational(0));
            for (const auto& [w, p] : game.distribution(v)) mass[image_of(w)] += p;
            for (int iw = 0; iw < m; ++iw)
                if (mass[iw] > 0) builder.add_edge(iv, iw, mass[iw]);
        } else if (game.is_controlled(v)) {
            std::vector<bool> seen(m, false);
            for (int w : game.successors(v)) {
                int iw = image_of(w);
                if (!seen[iw]) {
                    seen[iw] = true;
                    builder.add_edge(iv, iw);
                }
            }
        }
    }
    map.image = builder.build();
    require_valid(map.image);
    return map;
}

bool NormalizationMap::is_identity() const {
    if (image.vertex_count() != static_cast<int>(vertex_map.size())) return false;
    for (int v = 0; v < image.vertex_count(); ++v)
        if (vertex_map[v] != v) return false;
    return true;
}

Valuation NormalizationMap::lift(const Valuation& image_values) const {
    if (static_cast<int>(image_values.size()) != image.vertex_count())
        throw std::invalid_argument("image valuation has the wrong size");
    Valuation values(vertex_map.size());
    for (std::size_t v = 0; v < vertex_map.size(); ++v) {
        if (vertex_map[v] == kToTarget)
            values[v] = 1;
        else if (vertex_map[v] == kToSink)
            values[v] = 0;
        else
            values[v] = image_values[vertex_map[v]];
    }
    return values;
}

int NormalizationMap::image_of(int original) const {
    int mapped = vertex_map[original];
    if (mapped == kToTarget) return image.target();
    if (mapped == kToSink) return image.sink();
    return mapped;
}

}  // namespace ssg
