#include "estrada/walks.hpp"

#include <bit>
#include <stdexcept>

namespace estrada {

namespace {

void check_cutoff(int K) {
    if (K < 0) throw std::invalid_argument("walk length cutoff must be >= 0");
}

void check_endpoint(const Graph& g, vertex_t v) {
    if (!g.contains(v)) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " not in graph");
    }
}

// x_{k+1}[y] = sum of x_k over N(y)
std::vector<BigInt> step(const Graph& g, const std::vector<BigInt>& x) {
    std::vector<BigInt> next(x.size());
    for (int y = 0; y < g.order(); ++y) {
        for (std::uint64_t r = g.row(y); r; r &= r - 1) next[y] += x[std::countr_zero(r)];
    }
    return next;
}

}  // namespace

std::vector<std::vector<BigInt>> walks_from(const Graph& g, vertex_t u, int K) {
    check_cutoff(K);
    check_endpoint(g, u);
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(K + 1);
    rows.emplace_back(g.order());
    rows[0][u] = 1;
    for (int k = 1; k <= K; ++k) rows.push_back(step(g, rows.back()));
    return rows;
}

WalkTable spectral_moments(const Graph& g, int K) {
    check_cutoff(K);
    WalkTable t;
    t.counts.assign(K + 1, 0);
    for (int u = 0; u < g.order(); ++u) {
        std::vector<BigInt> x(g.order());
        x[u] = 1;
        t.counts[0] += 1;
        for (int k = 1; k <= K; ++k) {
            x = step(g, x);
            t.counts[k] += x[u];
        }
    }
    return t;
}

BigInt spectral_moment(const Graph& g, int k) { return spectral_moments(g, k).counts[k]; }

WalkTable walk_table(const Graph& g, vertex_t u, vertex_t v, int K) {
    check_endpoint(g, v);
    auto rows = walks_from(g, u, K);
    WalkTable t{u, v, {}};
    t.counts.reserve(K + 1);
    for (auto& row : rows) t.counts.push_back(std::move(row[v]));
    return t;
}

BigInt walk_count(const Graph& g, vertex_t u, vertex_t v, int k) {
    return walk_table(g, u, v, k).counts[k];
}

WalkTable walk_table_through(const Graph& g, vertex_t u, vertex_t v, vertex_t w, int K) {
    check_endpoint(g, w);
    WalkTable all = walk_table(g, u, v, K);
    if (w == u || w == v) return all;
    const vertex_t removed[] = {w};
    const Deletion d = subgraph_delete(g, removed);
    const WalkTable avoiding = walk_table(d.graph, d.label_map[u], d.label_map[v], K);
    for (int k = 0; k <= K; ++k) all.counts[k] -= avoiding.counts[k];
    return all;
}

BigInt walk_count_through(const Graph& g, vertex_t u, vertex_t v, vertex_t w, int k) {
    return walk_table_through(g, u, v, w, k).counts[k];
}

std::string to_string(Dominance d) {
    switch (d) {
        case Dominance::equal: return "equal";
        case Dominance::strictly_dominated: return "strictly-dominated";
        case Dominance::strictly_dominates: return "strictly-dominates";
        case Dominance::incomparable: return "incomparable";
        case Dominance::undetermined: return "undetermined";
    }
    return "?";
}

DominanceVerdict compare_tables(const WalkTable& lhs, const WalkTable& rhs) {
    if (lhs.counts.size() != rhs.counts.size()) {
        throw std::invalid_argument("compare_tables: cutoffs differ");
    }
    DominanceVerdict out;
    out.cutoff = lhs.cutoff();
    out.lhs = lhs.counts;
    out.rhs = rhs.counts;
    if (out.cutoff < 1) return out;
    bool less = false, greater = false;
    for (int k = 1; k <= out.cutoff; ++k) {
        if (lhs.counts[k] == rhs.counts[k]) continue;
        if (!out.first_strict) out.first_strict = k;
        (lhs.counts[k] < rhs.counts[k] ? less : greater) = true;
    }
    if (less && greater) out.classification = Dominance::incomparable;
    else if (less) out.classification = Dominance::strictly_dominated;
    else if (greater) out.classification = Dominance::strictly_dominates;
    else out.classification = Dominance::equal;
    return out;
}

DominanceVerdict dominance(const Graph& g1, vertex_t u1, vertex_t v1, const Graph& g2, vertex_t u2,
                           vertex_t v2, int K) {
    if (K < 1) throw std::invalid_argument("dominance cutoff must be >= 1");
    return compare_tables(walk_table(g1, u1, v1, K), walk_table(g2, u2, v2, K));
}

}  // namespace estrada
