#ifndef ESTRADA_WALKS_HPP
#define ESTRADA_WALKS_HPP

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "estrada/graph.hpp"

namespace estrada {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int default_walk_cutoff = 40;

// counts[k] for k = 0..K. `u`/`v` are -1 for the global (closed walk) table.
struct WalkTable {
    vertex_t u = -1;
    vertex_t v = -1;
    std::vector<BigInt> counts;

    int cutoff() const { return static_cast<int>(counts.size()) - 1; }
};

// M_k(G) = tr A^k for k = 0..K
WalkTable spectral_moments(const Graph& g, int K);
BigInt spectral_moment(const Graph& g, int k);

// M_k(G; u, v) = (A^k)_{uv} for k = 0..K
WalkTable walk_table(const Graph& g, vertex_t u, vertex_t v, int K);
BigInt walk_count(const Graph& g, vertex_t u, vertex_t v, int k);

// rows[k][x] = (A^k)_{ux}; one vector iteration serves every endpoint x
std::vector<std::vector<BigInt>> walks_from(const Graph& g, vertex_t u, int K);

// walks u -> v of each length that visit w, by inclusion-exclusion against G - w
WalkTable walk_table_through(const Graph& g, vertex_t u, vertex_t v, vertex_t w, int K);
BigInt walk_count_through(const Graph& g, vertex_t u, vertex_t v, vertex_t w, int k);

enum class Dominance {
    equal,
    strictly_dominated,   // lhs <= rhs for every k <= K, strict somewhere
    strictly_dominates,   // lhs >= rhs for every k <= K, strict somewhere
    incomparable,
    undetermined,
};

std::string to_string(Dominance d);

/*
 * K-truncated comparison of two walk sequences over k = 1..K. A verdict of
 * `equal` or `strictly_dominated` only speaks for the lengths inspected.
 */
struct DominanceVerdict {
    int cutoff = 0;
    std::vector<BigInt> lhs;  // index k = 0..K, k = 0 is ignored
    std::vector<BigInt> rhs;
    Dominance classification = Dominance::undetermined;
    std::optional<int> first_strict;  // smallest k with lhs != rhs

    // lhs <= rhs at every inspected k
    bool weakly_dominated() const {
        return classification == Dominance::equal || classification == Dominance::strictly_dominated;
    }
    bool weakly_dominates() const {
        return classification == Dominance::equal || classification == Dominance::strictly_dominates;
    }
};

DominanceVerdict compare_tables(const WalkTable& lhs, const WalkTable& rhs);

DominanceVerdict dominance(const Graph& g1, vertex_t u1, vertex_t v1, const Graph& g2, vertex_t u2,
                           vertex_t v2, int K = default_walk_cutoff);

}  // namespace estrada

#endif
