#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "csg/shortest_gains.hpp"
#include "test_support.hpp"

using namespace csg;
using testsupport::Graph;

namespace {

Graph cycle_graph(Index n) {
    std::vector<Graph::Edge> edges;
    for (Index i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, {1, 0}});
    return Graph(n, edges);
}

}  // namespace

TEST_CASE("bfs distances on C5, K2 and fig3") {
    CHECK(bfs_distances(cycle_graph(5), 0) == std::vector<int>{0, 1, 2, 2, 1});
    CHECK(bfs_distances(Graph(2, {{0, 1, {1, 1}}}), 0) == std::vector<int>{0, 1});
    CHECK(bfs_distances(testsupport::fig3(), 1)[3] == 2);
}

TEST_CASE("bfs rejects disconnected graphs and bad sources") {
    Graph two_k2(4, {{0, 1, {1, 0}}, {2, 3, {1, 0}}});
    CHECK_THROWS_AS(bfs_distances(two_k2, 0), Error);
    CHECK_THROWS_AS(bfs_distances(two_k2, 7), Error);
}

TEST_CASE("bipartiteness") {
    auto c4 = is_bipartite(cycle_graph(4));
    REQUIRE(c4.has_value());
    CHECK((*c4)[0] != (*c4)[1]);
    CHECK((*c4)[0] == (*c4)[2]);
    CHECK(!is_bipartite(cycle_graph(3)).has_value());
    CHECK(!is_bipartite(testsupport::fig3()).has_value());  // triangle 0-1-2
    // a valid coloring separates every edge
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        RandomModel<double> model;
        model.seed = seed;
        Graph g = testsupport::random_bipartite_csg(model, 4, 5, 6);
        auto coloring = is_bipartite(g);
        REQUIRE(coloring.has_value());
        for (const auto& e : g.edges())
            CHECK((*coloring)[std::size_t(e.u)] != (*coloring)[std::size_t(e.v)]);
    }
}

TEST_CASE("blocks of a path are its edges") {
    Graph path(3, {{0, 1, {1, 0}}, {1, 2, {1, 0}}});
    auto bs = blocks(path);
    REQUIRE(bs.size() == 2);
    std::set<std::vector<Index>> got(bs.begin(), bs.end());
    CHECK(got.count({0, 1}) == 1);
    CHECK(got.count({1, 2}) == 1);
}

TEST_CASE("fig3 is a single block; cross-checked by vertex removal") {
    auto bs = blocks(testsupport::fig3());
    REQUIRE(bs.size() == 1);
    CHECK(bs[0] == std::vector<Index>{0, 1, 2, 3});
    CHECK(testsupport::brute_force_biconnected(testsupport::fig3()));
}

TEST_CASE("two triangles sharing a vertex form two blocks") {
    Graph g(5, {{0, 1, {1, 0}},
                {1, 2, {1, 0}},
                {2, 0, {1, 0}},
                {2, 3, {1, 0}},
                {3, 4, {1, 0}},
                {4, 2, {1, 0}}});
    auto bs = blocks(g);
    REQUIRE(bs.size() == 2);
    std::set<std::vector<Index>> got(bs.begin(), bs.end());
    CHECK(got.count({0, 1, 2}) == 1);
    CHECK(got.count({2, 3, 4}) == 1);
}

TEST_CASE("blocks partition the edge set") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        RandomModel<double> model;
        model.kind = GainModel::annulus;
        model.seed = seed;
        const Index n = 3 + Index(seed % 8);
        const Index max_m = n * (n - 1) / 2;
        const Index m = std::min<Index>(max_m, n - 1 + Index(seed % 5));
        Graph g = random_csg(model, n, m);
        auto bs = blocks(g);
        Index covered = 0;
        for (const auto& b : bs) {
            std::set<Index> in(b.begin(), b.end());
            for (const auto& e : g.edges())
                if (in.count(e.u) && in.count(e.v)) ++covered;
        }
        CHECK(covered == g.edge_count());
        // a block on 3+ vertices is 2-connected as an induced subgraph
        for (const auto& b : bs) {
            if (b.size() < 3) continue;
            std::vector<Index> remap(std::size_t(n), -1);
            for (std::size_t i = 0; i < b.size(); ++i) remap[std::size_t(b[i])] = Index(i);
            std::vector<Graph::Edge> sub;
            for (const auto& e : g.edges())
                if (remap[std::size_t(e.u)] >= 0 && remap[std::size_t(e.v)] >= 0)
                    sub.push_back({remap[std::size_t(e.u)], remap[std::size_t(e.v)], e.gain});
            CHECK(testsupport::brute_force_biconnected(Graph(Index(b.size()), sub)));
        }
    }
}

TEST_CASE("blocks require a connected graph") {
    Graph two_k2(4, {{0, 1, {1, 0}}, {2, 3, {1, 0}}});
    CHECK_THROWS_AS(blocks(two_k2), Error);
}
