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

#ifndef SSG_TESTS_CORPUS_HPP
#define SSG_TESTS_CORPUS_HPP

#include <cstdint>

#include "ssg/generate.hpp"

namespace ssgtest {

/*
 * Shared test corpus: 512 seeded games with at most 9 vertices, 1 to 3
 * random vertices and probability denominators up to 4. Small enough for
 * the brute-force oracle, varied enough to cover merges, dead ends and
 * plain normalized games.
 */
constexpr int kCorpusSize = 512;

inline std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4b08dull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline ssg::GenSpec corpus_spec(int index) {
    std::uint64_t h = mix(static_cast<std::uint64_t>(index));
    ssg::GenSpec spec;
    spec.max_count = static_cast<int>(h % 3);
    spec.min_count = static_cast<int>((h >> 8) % 3);
    spec.random_count = 1 + static_cast<int>((h >> 16) % 3);
    int inner = spec.max_count + spec.min_count + spec.random_count;
    spec.out_degree_min = 1;
    spec.out_degree_max = inner + 1 < 3 ? inner + 1 : 3;
    spec.max_denominator = 4;
    spec.terminal_edge_percent = 30;
    spec.seed = mix(static_cast<std::uint64_t>(index) * 7919ull);
    return spec;
}

inline ssg::Game corpus_game(int index) { return ssg::generate_game(corpus_spec(index)); }

}  // namespace ssgtest

#endif
