#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <numeric>
#include <random>

#include "estrada/canon.hpp"
#include "oracles.hpp"

using namespace estrada;

namespace {

Permutation random_perm(std::mt19937& rng, int n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("canonical form is invariant under relabelling") {
    std::mt19937 rng(1);
    std::vector<Graph> samples{build_theta(2, 2, 1), build_g1(9),  build_g2(9),
                               build_infty(3, 4, 2), cycle_graph(8), complete_graph(6),
                               attach_pendants(build_theta(3, 3, 2), 4, 3)};
    for (int i = 0; i < 20; ++i) samples.push_back(oracle::random_graph(rng, 10, 0.3));
    for (const auto& g : samples) {
        const auto form = canonical_form(g);
        CHECK(form.order() == g.order());
        for (int t = 0; t < 10; ++t) CHECK(canonical_form(permute(g, random_perm(rng, g.order()))) == form);
        // the representative is isomorphic and already canonical
        CHECK(canonical_form(form.graph()) == form);
        CHECK(form.graph().size() == g.size());
    }
}

TEST_CASE("K4 minus an edge under every labelling") {
    const auto form = canonical_form(build_theta(2, 2, 1));
    Graph k4 = complete_graph(4);
    for (const auto& e : k4.edges()) {
        const Edge drop[] = {e};
        CHECK(canonical_form(subgraph_delete(k4, {}, drop).graph) == form);
    }
}

TEST_CASE("infinity(3,3,1) and theta(3,2,1) differ") {
    CHECK(canonical_form(build_infty(3, 3, 1)) != canonical_form(build_theta(3, 2, 1)));
}

TEST_CASE("canonical forms separate exactly the isomorphism classes up to 6 vertices") {
    // group every labelled graph by form, then compare representatives pairwise
    for (int n = 1; n <= 6; ++n) {
        const int pairs = n * (n - 1) / 2;
        std::map<CanonicalForm, Graph> classes;
        std::mt19937 rng(n);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            Graph g = oracle::graph_from_mask(n, mask);
            auto form = canonical_form(g);
            auto [it, fresh] = classes.emplace(form, g);
            // sample the "same form implies isomorphic" direction
            if (!fresh && rng() % 64 == 0) CHECK(oracle::isomorphic_bruteforce(it->second, g));
        }
        std::vector<Graph> reps;
        for (const auto& [f, g] : classes) reps.push_back(g);
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j)
                REQUIRE_FALSE(oracle::isomorphic_bruteforce(reps[i], reps[j]));
        // graphs on n vertices up to isomorphism: OEIS A000088
        const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156};
        CHECK(classes.size() == expected[n]);
    }
}

TEST_CASE("automorphism generators") {
    auto k2 = automorphisms(complete_graph(2));
    CHECK(group_elements(k2, 2).size() == 2);

    auto k23 = automorphisms(build_theta(2, 2, 2));
    for (const auto& p : k23) CHECK(is_automorphism(build_theta(2, 2, 2), p));
    CHECK(group_elements(k23, 5).size() == 12);

    // theta with distinct path lengths: the branch swap exists
    Graph t = build_theta(4, 3, 2);
    auto group = group_elements(automorphisms(t), t.order());
    bool swaps = false;
    for (const auto& p : group) swaps = swaps || (p[0] == 1 && p[1] == 0);
    CHECK(swaps);
    CHECK(group.size() == 2);

    CHECK(group_elements(automorphisms(build_g1(9)), 9).size() == 2 * 120);
}

TEST_CASE("automorphism group orders match brute force") {
    std::mt19937 rng(9);
    std::vector<Graph> samples{cycle_graph(7), complete_graph(5), build_infty(3, 3, 1), build_g2(7),
                               attach_pendants(attach_pendants(build_theta(2, 2, 1), 2, 2), 3, 2)};
    for (int i = 0; i < 40; ++i) samples.push_back(oracle::random_graph(rng, 7, 0.35));
    for (const auto& g : samples) {
        auto gens = automorphisms(g);
        for (const auto& p : gens) REQUIRE(is_automorphism(g, p));
        CHECK(static_cast<long long>(group_elements(gens, g.order()).size()) ==
              oracle::automorphism_count_bruteforce(g));
    }
}

TEST_CASE("size cap") {
    CHECK_THROWS_AS(canonical_form(path_graph(17)), std::invalid_argument);
    CHECK_NOTHROW(canonical_form(path_graph(17), 20));
}
