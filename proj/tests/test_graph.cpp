#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "estrada/graph.hpp"

using namespace estrada;

namespace {

std::vector<int> cycle_lengths_at(const Graph& g, vertex_t v) {
    std::vector<int> out;
    for (const auto& c : cycles_through(g, v)) out.push_back(static_cast<int>(c.size()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<vertex_t> degree3(const Graph& g) {
    std::vector<vertex_t> out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 3) out.push_back(v);
    return out;
}

}  // namespace

TEST_CASE("construction and validation") {
    Graph k1(1, {});
    CHECK(k1.order() == 1);
    CHECK(k1.degree_sequence() == std::vector<int>{0});

    Graph k2(2, {{0, 1}});
    CHECK(k2.degrees() == std::vector<int>{1, 1});

    Graph t(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
    CHECK(t.degrees() == std::vector<int>{3, 3, 2, 2});
    CHECK(t.neighbors(2) == std::vector<vertex_t>{0, 1});

    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(65, {}), std::invalid_argument);
    CHECK_NOTHROW(Graph(64, {{0, 63}}));
    CHECK(Graph(64, {{0, 63}}).edges() == std::vector<Edge>{{0, 63}});
}

TEST_CASE("infinity graphs") {
    Graph a = build_infty(3, 3, 1);
    CHECK(a.order() == 5);
    CHECK(a.size() == 6);
    CHECK(a.degree_sequence() == std::vector<int>{4, 2, 2, 2, 2});
    CHECK(classify(a).bicyclic);

    Graph b = build_infty(3, 4, 2);
    // p + q + l - 2 vertices, one more edge than vertices
    CHECK(b.order() == 7);
    CHECK(b.size() == 8);
    CHECK(degree3(b).size() == 2);

    CHECK_THROWS(build_infty(2, 3, 1));
    CHECK_THROWS(build_infty(3, 3, 0));
}

TEST_CASE("theta graphs") {
    Graph a = build_theta(2, 2, 1);
    CHECK(a.order() == 4);
    CHECK(a.size() == 5);
    CHECK(a.degree_sequence() == std::vector<int>{3, 3, 2, 2});

    Graph b = build_theta(2, 2, 2);
    CHECK(b.order() == 5);
    CHECK(b.size() == 6);
    // K_{2,3}: {0,1} against {2,3,4}
    for (int x : {2, 3, 4}) {
        CHECK(b.adjacent(0, x));
        CHECK(b.adjacent(1, x));
    }
    CHECK_FALSE(b.adjacent(0, 1));

    CHECK_THROWS(build_theta(1, 1, 1));
    CHECK_THROWS(build_theta(3, 1, 1));
    CHECK_THROWS(build_theta(0, 2, 2));
}

TEST_CASE("theta cycle lengths at a branch vertex") {
    for (int p = 1; p <= 5; ++p)
        for (int q = 1; q <= p; ++q)
            for (int l = 1; l <= q; ++l) {
                if ((p == 1) + (q == 1) + (l == 1) > 1) continue;
                Graph g = build_theta(p, q, l);
                std::vector<int> expect{p + q, p + l, q + l};
                std::sort(expect.begin(), expect.end());
                CHECK(cycle_lengths_at(g, 0) == expect);
                CHECK(degree3(g) == std::vector<vertex_t>{0, 1});
            }
}

TEST_CASE("coalescence") {
    Graph k2 = complete_graph(2);
    Graph p3 = coalesce(k2, 0, k2, 0);
    CHECK(p3.order() == 3);
    CHECK(p3.degree_sequence() == std::vector<int>{2, 1, 1});

    Graph c3 = cycle_graph(3);
    Graph inf = coalesce(c3, 1, c3, 2);
    CHECK(inf.order() == 5);
    CHECK(inf.size() == c3.size() * 2);
    CHECK(inf.degree(1) == 4);
    auto k = classify(inf).kernel;
    REQUIRE(k);
    CHECK(k->kind == KernelKind::infinity);
    CHECK(k->p == 3);
    CHECK(k->q == 3);
    CHECK(k->l == 1);
}

TEST_CASE("pendants and G1/G2") {
    Graph t = build_theta(2, 2, 1);
    CHECK(attach_pendants(t, 0, 0) == t);
    Graph star = attach_pendants(Graph(1, {}), 0, 3);
    CHECK(star.degree_sequence() == std::vector<int>{3, 1, 1, 1});

    CHECK(build_g1(4) == build_theta(2, 2, 1));
    CHECK(build_g1(5).degree_sequence() == std::vector<int>{4, 3, 2, 2, 1});
    CHECK(build_g2(5) == build_theta(2, 2, 2));
    for (int n = 5; n <= 20; ++n) {
        CHECK(build_g1(n).degree(0) == n - 1);
        CHECK(build_g2(n).degree(0) == n - 2);
        CHECK(build_g1(n).size() == n + 1);
        CHECK(build_g2(n).size() == n + 1);
    }
    CHECK_THROWS(build_g1(3));
    CHECK_THROWS(build_g2(4));
    CHECK_THROWS(attach_pendants(path_graph(60), 0, 5));
}

TEST_CASE("classification") {
    CHECK_FALSE(classify(path_graph(6)).bicyclic);
    CHECK_FALSE(classify(star_graph(4)).bicyclic);
    CHECK_FALSE(classify(cycle_graph(5)).bicyclic);
    Graph disconnected(8, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {4, 5}, {5, 6}, {6, 4}, {4, 7}, {5, 7}});
    CHECK_FALSE(classify(disconnected).connected);
    CHECK_FALSE(classify(disconnected).bicyclic);

    auto c = classify(build_g1(7));
    CHECK(c.bicyclic);
    REQUIRE(c.kernel);
    CHECK(c.kernel->kind == KernelKind::theta);
    CHECK(c.kernel->p == 2);
    CHECK(c.kernel->q == 2);
    CHECK(c.kernel->l == 1);
    CHECK(c.kernel->vertices == std::vector<vertex_t>{0, 1, 2, 3});

    Graph inf = attach_pendants(build_infty(3, 4, 2), 5, 1);
    auto ci = classify(inf);
    REQUIRE(ci.kernel);
    CHECK(ci.kernel->kind == KernelKind::infinity);
    CHECK(ci.kernel->p == 3);
    CHECK(ci.kernel->q == 4);
    CHECK(ci.kernel->l == 2);
    CHECK(ci.kernel->vertices.size() == 7);
}

TEST_CASE("kernel round trip for every small kernel") {
    for (int p = 3; p <= 6; ++p)
        for (int q = p; q <= 6; ++q)
            for (int l = 1; l <= 4; ++l) {
                auto k = classify(build_infty(p, q, l)).kernel;
                REQUIRE(k);
                CHECK(k->kind == KernelKind::infinity);
                CHECK(std::tie(k->p, k->q, k->l) == std::tie(p, q, l));
                CHECK(static_cast<int>(k->vertices.size()) == p + q + l - 2);
                // swapped cycle order normalises the same way
                CHECK(classify(build_infty(q, p, l)).kernel->same_shape(*k));
            }
    for (int p = 1; p <= 6; ++p)
        for (int q = 1; q <= p; ++q)
            for (int l = 1; l <= q; ++l) {
                if ((p == 1) + (q == 1) + (l == 1) > 1) continue;
                auto k = classify(build_theta(l, p, q)).kernel;
                REQUIRE(k);
                CHECK(k->kind == KernelKind::theta);
                CHECK(std::tie(k->p, k->q, k->l) == std::tie(p, q, l));
                CHECK(static_cast<int>(k->vertices.size()) == p + q + l - 1);
            }
}

TEST_CASE("pendant trees strip back to the kernel") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = trial % 2 ? build_theta(3, 2, 2) : build_infty(3, 4, 1);
        const auto kernel = classify(g).kernel;
        const int kernel_order = g.order();
        const int extra = 1 + trial % 6;
        for (int i = 0; i < extra; ++i) {
            std::uniform_int_distribution<int> pick(0, g.order() - 1);
            g = attach_pendants(g, pick(rng), 1);
        }
        auto c = classify(g);
        REQUIRE(c.bicyclic);
        CHECK(c.kernel->same_shape(*kernel));
        CHECK(static_cast<int>(c.kernel->vertices.size()) == kernel_order);
        CHECK(c.kernel->vertices.back() < kernel_order);
    }
}

TEST_CASE("vertex and edge deletion") {
    const vertex_t zero[] = {0};
    auto k1 = subgraph_delete(complete_graph(2), zero);
    CHECK(k1.graph.order() == 1);
    CHECK(k1.label_map == std::vector<vertex_t>{-1, 0});

    auto p3 = subgraph_delete(build_theta(2, 2, 1), zero);
    CHECK(p3.graph.order() == 3);
    CHECK(p3.graph.size() == 2);
    CHECK(p3.graph.degree_sequence() == std::vector<int>{2, 1, 1});

    // t = 3, v = 4 lie on the second triangle; neither is the shared vertex 0
    Graph inf = build_infty(3, 3, 1);
    const Edge tv[] = {{3, 4}};
    auto uni = subgraph_delete(inf, {}, tv);
    CHECK(uni.graph.order() == 5);
    CHECK(uni.graph.size() == uni.graph.order());

    const vertex_t both[] = {0, 1};
    CHECK_THROWS(subgraph_delete(complete_graph(2), both));
    const Edge missing[] = {{1, 3}};
    CHECK_THROWS(subgraph_delete(inf, {}, missing));
}

TEST_CASE("edge rotation") {
    // infty(3,3,1): shared vertex 0, triangles {0,1,2} and {0,3,4}
    Graph inf = build_infty(3, 3, 1);
    Graph r = edge_rotation(inf, 2, 1, 3);
    CHECK(r.order() == inf.order());
    CHECK(r.size() == inf.size());
    auto c = classify(r);
    REQUIRE(c.kernel);
    CHECK(c.kernel->kind == KernelKind::theta);
    CHECK(std::tie(c.kernel->p, c.kernel->q, c.kernel->l) == std::tuple{2, 2, 1});
    CHECK(r.degree_sequence() == build_g1(5).degree_sequence());
    CHECK(edge_rotation(r, 2, 3, 1) == inf);

    CHECK_THROWS(edge_rotation(inf, 1, 3, 4));  // 13 is not an edge
    CHECK_THROWS(edge_rotation(inf, 1, 2, 0));  // 10 already present
    CHECK_THROWS(edge_rotation(inf, 1, 2, 1));
}

TEST_CASE("rotations keep order and size") {
    std::mt19937 rng(11);
    Graph g = attach_pendants(build_theta(4, 3, 2), 2, 3);
    int tried = 0;
    for (int t = 0; t < g.order(); ++t)
        for (int v : g.neighbors(t))
            for (int w = 0; w < g.order(); ++w) {
                if (w == t || w == v || g.adjacent(t, w)) continue;
                Graph r = edge_rotation(g, t, v, w);
                CHECK(r.order() == g.order());
                CHECK(r.size() == g.size());
                CHECK(classify(r).bicyclic == r.connected());
                ++tried;
            }
    CHECK(tried > 100);
}

TEST_CASE("branch shift and pendant migration") {
    // path 0-1-2-3 with pendant branch at 2: shifting 2 onto 1 moves 3 to 1
    Graph p = path_graph(4);
    Graph s = shift_branches(p, 2, 1);
    CHECK(s.adjacent(1, 3));
    CHECK(s.degree(2) == 1);
    CHECK(s.size() == p.size());

    Graph g = attach_pendants(attach_pendants(build_theta(2, 2, 2), 1, 2), 0, 1);
    Graph m = migrate_pendants(g, 1, 0);
    CHECK(m.degree(0) == 3 + 3);
    CHECK(m.degree(1) == 3);
    CHECK(m.size() == g.size());
}

TEST_CASE("cycles through a vertex") {
    CHECK(cycles_through(path_graph(5), 2).empty());
    CHECK(cycle_lengths_at(build_theta(2, 2, 1), 0) == std::vector<int>{3, 3, 4});
    CHECK(cycle_lengths_at(build_infty(3, 3, 1), 1) == std::vector<int>{3});
    CHECK(cycle_lengths_at(build_infty(3, 3, 1), 0) == std::vector<int>{3, 3});
    auto k4 = cycles_through(complete_graph(4), 0);
    // 3 triangles and 3 four-cycles through any vertex of K4
    CHECK(k4.size() == 6);
    for (const auto& c : k4) {
        CHECK(c.front() == *std::min_element(c.begin(), c.end()));
        CHECK(c[1] < c.back());
    }
}

TEST_CASE("permutation relabelling") {
    Graph g = build_theta(3, 2, 2);
    std::vector<vertex_t> perm{5, 4, 3, 2, 1, 0};
    Graph h = permute(g, perm);
    CHECK(h.degree_sequence() == g.degree_sequence());
    CHECK(h.adjacent(perm[0], perm[2]));
    std::vector<vertex_t> bad{0, 0, 1, 2, 3, 4};
    CHECK_THROWS(permute(g, bad));
}
