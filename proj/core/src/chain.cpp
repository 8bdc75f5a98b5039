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

#include "ssg/chain.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ssg {

EmbeddedChain embed_chain(const Game& game, const RegionPartition& partition) {
    int m = partition.k + 2;
    EmbeddedChain chain;
    chain.p.assign(m, std::vector<Rational>(m, Rational(0)));
    chain.p[0][0] = 1;
    chain.p[m - 1][m - 1] = 1;
    for (int i = 1; i <= partition.k; ++i) {
        // Each middle rank holds exactly one random vertex: its own pivot.
        int pivot = -1;
        for (int v : partition.regions[i]) {
            if (game.kind(v) == VertexKind::Random) {
                pivot = v;
                break;
            }
        }
        assert(pivot != -1);
        for (const auto& [w, p] : game.distribution(pivot)) chain.p[i][partition.rank[w]] += p;
    }
    return chain;
}

ChainValues solve_chain(const EmbeddedChain& chain) {
    int m = chain.size();
    ChainValues result;
    result.reachable.assign(m, false);
    result.reachable[m - 1] = true;
    bool grown = true;
    while (grown) {
        grown = false;
        for (int i = 1; i < m - 1; ++i) {
            if (result.reachable[i]) continue;
            for (int j = 0; j < m; ++j) {
                if (chain.p[i][j] > 0 && result.reachable[j]) {
                    result.reachable[i] = true;
                    grown = true;
                    break;
                }
            }
        }
    }

    SparseChain sparse;
    sparse.target = m - 1;
    sparse.rows.resize(m);
    for (int i = 1; i < m - 1; ++i)
        for (int j = 0; j < m; ++j)
            if (chain.p[i][j] > 0) sparse.rows[i].emplace_back(j, chain.p[i][j]);
    result.x = solve_reach_values(sparse);
    return result;
}

PermutationValues permutation_values(const Game& game, const Permutation& permutation) {
    PermutationValues pv;
    pv.partition = compute_regions(game, permutation);
    pv.chain = embed_chain(game, pv.partition);
    ChainValues chain_values = solve_chain(pv.chain);
    pv.values.resize(game.vertex_count());
    for (int v = 0; v < game.vertex_count(); ++v)
        pv.values[v] = chain_values.x[pv.partition.rank[v]];
    return pv;
}

namespace {

constexpr int kDead = -1;
constexpr int kUnresolved = -2;

std::size_t bit_size(const Rational& q) {
    return mpz_sizeinbase(mpq_numref(q.get_mpq_t()), 2) +
           mpz_sizeinbase(mpq_denref(q.get_mpq_t()), 2);
}

}  // namespace

std::vector<Rational> solve_reach_values(const SparseChain& chain) {
    int n = chain.size();
    if (chain.target < 0 || chain.target >= n)
        throw std::invalid_argument("chain target out of range");
    for (int i = 0; i < n; ++i) {
        if (chain.rows[i].empty()) continue;
        Rational sum(0);
        for (const auto& [j, p] : chain.rows[i]) {
            if (j < 0 || j >= n || p <= 0) throw std::invalid_argument("malformed chain row");
            sum += p;
        }
        if (sum != 1) throw std::invalid_argument("chain row does not sum to 1");
    }

    // States with one certain move elsewhere only relay their destination's
    // value; collapsing them first keeps the linear system at the size of the
    // genuinely branching states. A loop of relays can never reach anything.
    std::vector<int> fwd(n, -1);
    for (int i = 0; i < n; ++i) {
        if (i == chain.target) continue;
        if (chain.rows[i].size() == 1 && chain.rows[i][0].second == 1 &&
            chain.rows[i][0].first != i)
            fwd[i] = chain.rows[i][0].first;
    }
    std::vector<int> dest(n, kUnresolved);
    for (int i = 0; i < n; ++i)
        if (fwd[i] == -1) dest[i] = i;
    std::vector<char> on_path(n, 0);
    std::vector<int> path;
    for (int s = 0; s < n; ++s) {
        if (dest[s] != kUnresolved) continue;
        path.clear();
        int cur = s;
        while (dest[cur] == kUnresolved && !on_path[cur]) {
            on_path[cur] = 1;
            path.push_back(cur);
            cur = fwd[cur];
        }
        int d = dest[cur] != kUnresolved ? dest[cur] : kDead;
        for (int p : path) {
            dest[p] = d;
            on_path[p] = 0;
        }
    }

    std::vector<std::vector<std::pair<int, Rational>>> eff(n);
    for (int i = 0; i < n; ++i) {
        if (i == chain.target || fwd[i] != -1) continue;
        std::vector<std::pair<int, Rational>> row;
        for (const auto& [j, p] : chain.rows[i]) {
            if (dest[j] != kDead) row.emplace_back(dest[j], p);
        }
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<int, Rational>> merged;
        for (auto& [d, p] : row) {
            if (!merged.empty() && merged.back().first == d)
                merged.back().second += p;
            else
                merged.emplace_back(d, p);
        }
        eff[i] = std::move(merged);
    }

    // Only states that can still reach the target carry unknowns; the rest
    // are zero and the restricted system is nonsingular.
    std::vector<std::vector<int>> rev(n);
    for (int i = 0; i < n; ++i)
        for (const auto& [d, p] : eff[i]) rev[d].push_back(i);
    std::vector<char> reach(n, 0);
    std::vector<int> queue = {chain.target};
    reach[chain.target] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int i : rev[queue[head]]) {
            if (!reach[i]) {
                reach[i] = 1;
                queue.push_back(i);
            }
        }
    }

    std::vector<int> core;
    std::vector<int> index(n, -1);
    for (int i = 0; i < n; ++i) {
        if (i != chain.target && fwd[i] == -1 && reach[i]) {
            index[i] = static_cast<int>(core.size());
            core.push_back(i);
        }
    }
    int c = static_cast<int>(core.size());

    std::vector<std::vector<Rational>> a(c, std::vector<Rational>(c, Rational(0)));
    std::vector<Rational> b(c, Rational(0));
    for (int r = 0; r < c; ++r) {
        a[r][r] = 1;
        for (const auto& [d, p] : eff[core[r]]) {
            if (d == chain.target)
                b[r] += p;
            else if (index[d] != -1)
                a[r][index[d]] -= p;
        }
    }

    auto lhs = a;
    auto rhs = b;
    for (int col = 0; col < c; ++col) {
        int pivot = -1;
        std::size_t best = 0;
        for (int r = col; r < c; ++r) {
            if (lhs[r][col] == 0) continue;
            std::size_t size = bit_size(lhs[r][col]);
            if (pivot == -1 || size < best) {
                pivot = r;
                best = size;
            }
        }
        if (pivot == -1) throw std::logic_error("chain system is singular");
        std::swap(lhs[pivot], lhs[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (int r = col + 1; r < c; ++r) {
            if (lhs[r][col] == 0) continue;
            Rational factor = lhs[r][col] / lhs[col][col];
            lhs[r][col] = 0;
            for (int j = col + 1; j < c; ++j)
                if (lhs[col][j] != 0) lhs[r][j] -= factor * lhs[col][j];
            rhs[r] -= factor * rhs[col];
        }
    }
    std::vector<Rational> y(c, Rational(0));
    for (int r = c - 1; r >= 0; --r) {
        Rational sum = rhs[r];
        for (int j = r + 1; j < c; ++j)
            if (lhs[r][j] != 0) sum -= lhs[r][j] * y[j];
        y[r] = sum / lhs[r][r];
    }

    std::vector<Rational> x(n, Rational(0));
    x[chain.target] = 1;
    for (int r = 0; r < c; ++r) x[core[r]] = y[r];
    for (int i = 0; i < n; ++i)
        if (fwd[i] != -1 && dest[i] != kDead) x[i] = x[dest[i]];

    // The eliminated system is checked against the untouched equations.
    for (int i = 0; i < n; ++i) {
        if (i == chain.target || fwd[i] != -1) continue;
        Rational acc(0);
        for (const auto& [d, p] : eff[i]) acc += p * x[d];
        if (acc != x[i]) throw std::logic_error("chain solution failed the residual check");
    }
    return x;
}

}  // namespace ssg
