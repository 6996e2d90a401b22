// Independent reference computations used only by the test suites. Nothing
// here calls into the walk engine, the eigensolver or the canonical labeller.
#ifndef ESTRADA_TESTS_ORACLES_HPP
#define ESTRADA_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "estrada/graph.hpp"

namespace oracle {

using estrada::Edge;
using estrada::Graph;

// edge bit i is the i-th pair of (0,1), (0,2), (1,2), (0,3), ...
inline Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> es;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((mask >> bit) & 1u) es.push_back({i, j});
    return Graph(n, es);
}

inline Graph random_graph(std::mt19937& rng, int n, double density) {
    std::bernoulli_distribution coin(density);
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) es.push_back({i, j});
    return Graph(n, es);
}

// number of vertex sequences u = x_0, ..., x_k = v with consecutive vertices adjacent
inline long long count_walks_dfs(const Graph& g, int u, int v, int k) {
    if (k == 0) return u == v;
    long long total = 0;
    for (int x = 0; x < g.order(); ++x)
        if (g.adjacent(u, x)) total += count_walks_dfs(g, x, v, k - 1);
    return total;
}

// tally[k][x] = walks of length k from u ending at x, by walking every sequence
inline std::vector<std::vector<long long>> walk_tally_dfs(const Graph& g, int u, int K) {
    std::vector<std::vector<long long>> tally(K + 1, std::vector<long long>(g.order(), 0));
    auto go = [&](auto&& self, int x, int depth) -> void {
        ++tally[depth][x];
        if (depth == K) return;
        for (int y = 0; y < g.order(); ++y)
            if (g.adjacent(x, y)) self(self, y, depth + 1);
    };
    go(go, u, 0);
    return tally;
}

inline long long count_walks_through_dfs(const Graph& g, int u, int v, int w, int k, bool seen = false) {
    seen = seen || u == w;
    if (k == 0) return (u == v && (seen || v == w)) ? 1 : 0;
    long long total = 0;
    for (int x = 0; x < g.order(); ++x)
        if (g.adjacent(u, x)) total += count_walks_through_dfs(g, x, v, w, k - 1, seen);
    return total;
}

// isomorphism by trying every bijection
inline bool isomorphic_bruteforce(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;
    std::vector<int> p(a.order());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (const auto& e : a.edges())
            if (!b.adjacent(p[e.a], p[e.b])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

inline long long automorphism_count_bruteforce(const Graph& g) {
    std::vector<int> p(g.order());
    std::iota(p.begin(), p.end(), 0);
    long long count = 0;
    do {
        bool ok = true;
        for (const auto& e : g.edges())
            if (!g.adjacent(p[e.a], p[e.b])) {
                ok = false;
                break;
            }
        count += ok;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

}  // namespace oracle

#endif
