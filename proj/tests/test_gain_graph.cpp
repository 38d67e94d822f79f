#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csg/balance.hpp"
#include "csg/random_graphs.hpp"
#include "test_support.hpp"

using namespace csg;
using testsupport::Cx;
using testsupport::Graph;

TEST_CASE("build stores the given orientation and conjugates the reverse") {
    Graph g(2, {{0, 1, {1, 1}}});
    CHECK(g.gain(0, 1) == Cx(1, 1));
    CHECK(g.gain(1, 0) == Cx(1, -1));
    CHECK(g.adjacent(0, 1));
    CHECK(g.edge_count() == 1);
}

TEST_CASE("build accepts the fig3 edge list") {
    Graph g = testsupport::fig3();
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 5);
    // edge given as v4 -> v1 with gain -i reads back as i from v1
    CHECK(g.gain(0, 3) == Cx(0, 1));
}

TEST_CASE("build rejects invalid edges") {
    auto code_of = [](auto&& make) {
        try {
            make();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::ParseError;  // sentinel: nothing thrown
    };
    CHECK(code_of([] { Graph(2, {{0, 1, {0, 0}}}); }) == ErrorCode::ZeroGain);
    CHECK(code_of([] { Graph(2, {{0, 0, {1, 0}}}); }) == ErrorCode::SelfLoop);
    CHECK(code_of([] { Graph(2, {{0, 1, {1, 0}}, {1, 0, {1, 0}}}); }) ==
          ErrorCode::DuplicateEdge);
    CHECK(code_of([] { Graph(2, {{0, 3, {1, 0}}}); }) == ErrorCode::BadVertex);
}

TEST_CASE("gain floor is strict") {
    CHECK_THROWS_AS(Graph(2, {{0, 1, {1e-13, 0}}}), Error);
    CHECK_NOTHROW(Graph(2, {{0, 1, {1e-11, 0}}}));
}

TEST_CASE("gain queries on non-adjacent pairs fail") {
    Graph g(4, {{0, 1, {1, 1}}});
    CHECK_THROWS_AS(g.gain(0, 3), Error);
    try {
        g.gain(0, 3);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotAdjacent);
    }
}

TEST_CASE("switching transforms K2 as conj(zeta_u) gain zeta_v") {
    Graph g(2, {{0, 1, {1, 1}}});
    SwitchingFunction<double> sw{{Cx(1, 0), Cx(0, 1)}};
    Graph h = apply_switching(g, sw);
    CHECK(h.gain(0, 1) == Cx(-1, 1));
}

TEST_CASE("identity switching is a no-op") {
    Graph g = testsupport::fig3();
    SwitchingFunction<double> sw{std::vector<Cx>(4, Cx(1, 0))};
    Graph h = apply_switching(g, sw);
    for (const auto& e : g.edges()) CHECK(h.gain(e.u, e.v) == e.gain);
}

TEST_CASE("switching validates its input") {
    Graph g(2, {{0, 1, {1, 1}}});
    CHECK_THROWS_AS(apply_switching(g, SwitchingFunction<double>{{Cx(1, 0)}}), Error);
    CHECK_THROWS_AS(apply_switching(g, SwitchingFunction<double>{{Cx(1, 0), Cx(2, 0)}}),
                    Error);
}

TEST_CASE("switching preserves gain moduli and round-trips through conj(zeta)") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        RandomModel<double> model;
        model.kind = GainModel::annulus;
        model.seed = seed;
        Graph g = random_csg(model, 8, 14);
        auto sw = random_switching<double>(8, seed + 101);
        Graph h = apply_switching(g, sw);
        for (const auto& e : g.edges())
            CHECK(std::abs(std::abs(h.gain(e.u, e.v)) - std::abs(e.gain)) <= 1e-12);
        SwitchingFunction<double> inv;
        for (const auto& z : sw.zeta) inv.zeta.push_back(std::conj(z));
        Graph back = apply_switching(h, inv);
        for (const auto& e : g.edges())
            CHECK(std::abs(back.gain(e.u, e.v) - e.gain) <= 1e-12 * (1 + std::abs(e.gain)));
    }
}

TEST_CASE("balancing switching makes fig3 gains positive real") {
    Graph g = testsupport::fig3();
    auto cert = balance_certificate(g);
    REQUIRE(cert.balanced());
    Graph h = apply_switching(g, *cert.zeta);
    for (const auto& e : h.edges()) {
        CHECK(std::abs(std::arg(e.gain)) <= 1e-9);
        CHECK(e.gain.real() > 0);
    }
}

TEST_CASE("magnitude graph replaces gains by moduli and is idempotent") {
    CHECK(magnitude_graph(Graph(2, {{0, 1, {3, 4}}})).gain(0, 1) == Cx(5, 0));
    Graph m = magnitude_graph(testsupport::fig3());
    const double s2 = std::sqrt(2.0);
    CHECK(m.gain(0, 1) == Cx(s2, 0));
    CHECK(m.gain(1, 2) == Cx(1, 0));
    CHECK(m.gain(2, 3) == Cx(s2, 0));
    CHECK(m.gain(3, 0) == Cx(1, 0));
    CHECK(m.gain(0, 2) == Cx(s2, 0));
    Graph mm = magnitude_graph(m);
    for (const auto& e : m.edges()) CHECK(mm.gain(e.u, e.v) == e.gain);
}

TEST_CASE("adjacency matrix is exactly self-adjoint") {
    Graph g(2, {{0, 1, {1, 1}}});
    auto a = adjacency_matrix(g);
    CHECK(a(0, 0) == Cx(0, 0));
    CHECK(a(0, 1) == Cx(1, 1));
    CHECK(a(1, 0) == Cx(1, -1));

    auto f3 = adjacency_matrix(testsupport::fig3());
    CHECK(f3(0, 2) == Cx(-1, 1));
    CHECK(f3(2, 0) == Cx(-1, -1));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        RandomModel<double> model;
        model.kind = GainModel::annulus;
        model.seed = seed;
        auto m = adjacency_matrix(random_csg(model, 7, 12));
        CHECK(m == ComplexMatrix<double>(m.adjoint()));
    }
}

TEST_CASE("empty edge set gives the zero adjacency matrix") {
    Graph g(3, {});
    CHECK(adjacency_matrix(g).isZero(0.0));
}
