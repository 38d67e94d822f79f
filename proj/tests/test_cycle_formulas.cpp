#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "csg/cycle_formulas.hpp"
#include "test_support.hpp"

using namespace csg;
using testsupport::Cx;
using testsupport::Graph;

namespace {

constexpr double pi = std::numbers::pi;

bool spectra_close(const std::vector<double>& a, const std::vector<double>& b,
                   double tol = 1e-8) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

}  // namespace

TEST_CASE("direct sum on hand-evaluated points") {
    CHECK(std::abs(agp_sum_direct(1, 1.0, pi) - (-1.0)) <= 1e-15);
    CHECK(std::abs(agp_sum_direct(2, 1.0, pi) - 1.0) <= 1e-14);
    CHECK(std::abs(agp_sum_direct(1, 2.0, 0.0) - 2.0) <= 1e-15);
}

TEST_CASE("closed form on hand-evaluated points (f = -16 and 16, g = 16)") {
    CHECK(std::abs(agp_denominator(1.0, pi) - 16.0) <= 1e-12);
    CHECK(std::abs(agp_sum_closed(1, 1.0, pi) - (-1.0)) <= 1e-12);
    CHECK(std::abs(agp_sum_closed(2, 1.0, pi) - 1.0) <= 1e-12);
}

TEST_CASE("the denominator is singular exactly at k = 1, theta = 0 mod 2 pi") {
    CHECK(agp_singular(1.0, 0.0));
    CHECK(agp_singular(1.0, 2 * pi));
    CHECK(!agp_singular(1.0, 0.05));
    CHECK(!agp_singular(0.99, 0.0));
    CHECK_THROWS_AS(agp_sum_closed(1, 1.0, 0.0), Error);
    try {
        agp_sum_closed(3, 1.0, 1e-8);
        FAIL("expected SingularDenominator");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularDenominator);
    }
}

TEST_CASE("closed form equals the direct sum across the sampled domain") {
    Rng rng(2024);
    for (int i = 0; i < 2000; ++i) {
        const int p = 1 + int(rng.below(50));
        const double k = rng.uniform(0.2, 3.0);
        const double theta = rng.uniform(0.05, 2 * pi - 0.05);
        if (agp_singular(k, theta)) continue;
        const double direct = agp_sum_direct(p, k, theta);
        const double closed = agp_sum_closed(p, k, theta);
        CHECK(std::abs(closed - direct) <= 1e-9 * (1 + std::abs(direct)));
    }
}

TEST_CASE("canonical odd cycle") {
    Graph t = canonical_odd_cycle(CycleParams<double>{3, 1.0, 0.0});
    for (const auto& e : t.edges()) CHECK(e.gain == Cx(1, 0));

    Graph c5 = canonical_odd_cycle(CycleParams<double>{5, 2.0, pi / 2});
    CHECK(c5.edge_count() == 5);
    CHECK(std::abs(c5.gain(4, 0) - Cx(0, 2)) <= 1e-12);
    for (Index i = 0; i + 1 < 5; ++i) CHECK(c5.gain(i, i + 1) == Cx(2, 0));

    // cycle gain is k^n e^{i theta}
    for (auto [n, k, theta] : {std::tuple{5, 0.7, 1.3}, {7, 2.0, -0.4}, {9, 1.0, pi}}) {
        Graph c = canonical_odd_cycle(CycleParams<double>{Index(n), k, theta});
        std::vector<Index> vs(static_cast<std::size_t>(n));
        std::iota(vs.begin(), vs.end(), 0);
        const Cx expected = std::polar(std::pow(k, n), theta);
        CHECK(std::abs(cycle_gain(c, OrientedCycle{vs}) - expected) <=
              1e-12 * (1 + std::abs(expected)));
    }

    CHECK_THROWS_AS(canonical_odd_cycle(CycleParams<double>{4, 1.0, 0.0}), Error);
    CHECK_THROWS_AS(canonical_odd_cycle(CycleParams<double>{5, -1.0, 0.0}), Error);
    CHECK_THROWS_AS(canonical_odd_cycle(CycleParams<double>{1, 1.0, 0.0}), Error);
}

TEST_CASE("odd cycles are distance compatible") {
    for (auto [n, k, theta] : {std::tuple{3, 1.0, 1.0}, {7, 0.5, 2.2}, {11, 2.0, pi}}) {
        Graph c = canonical_odd_cycle(CycleParams<double>{Index(n), k, theta});
        CHECK(compatibility_report(c).graph_distance_compatible);
    }
}

TEST_CASE("closed-form spectrum of (3,1,0) is the K3 distance spectrum") {
    auto s = cycle_distance_spectrum_closed(CycleParams<double>{3, 1.0, 0.0});
    CHECK(spectra_close(s.values, {-1.0, -1.0, 2.0}, 1e-12));
}

TEST_CASE("closed-form spectrum of (5,1,pi)") {
    auto s = cycle_distance_spectrum_closed(CycleParams<double>{5, 1.0, pi});
    CHECK(spectra_close(s.values,
                        {-3.8541019662496845, -3.8541019662496845, 2.0,
                         2.8541019662496845, 2.8541019662496845},
                        1e-12));
    // the 4-decimal quoted values
    CHECK(spectra_close(s.values, {-3.8541, -3.8541, 2.0, 2.8541, 2.8541}, 1e-3));
}

TEST_CASE("every closed-form spectrum sums to zero") {
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        const Index n = 3 + 2 * Index(rng.below(6));
        const double k = rng.uniform(0.3, 2.5);
        const double theta = rng.uniform(0.0, 2 * pi);
        auto s = cycle_distance_spectrum_closed(CycleParams<double>{n, k, theta});
        double sum = 0;
        for (double v : s.values) sum += v;
        CHECK(std::abs(sum) <= 1e-8);
    }
}

TEST_CASE("closed form vs numeric eigensolver on the canonical cycle") {
    for (Index n : {3, 5, 7, 9}) {
        for (double k : {0.5, 1.0, 2.0}) {
            for (double theta : {0.0, pi / 3, 1.0}) {
                const CycleParams<double> params{n, k, theta};
                auto closed = cycle_distance_spectrum_closed(params);
                auto numeric = hermitian_eigenvalues(
                    distance_matrix(canonical_odd_cycle(params)).entries);
                CHECK(spectra_close(closed.values, numeric.values, 1e-8));
            }
        }
    }
}

TEST_CASE("spectrum depends only on the cycle gain argument, not its distribution") {
    // spread the total argument randomly over the edges, keeping modulus k
    Rng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const Index n = 3 + 2 * Index(rng.below(5));
        const double k = rng.uniform(0.4, 2.0);
        const double theta = rng.uniform(0.0, 2 * pi);
        std::vector<double> args(static_cast<std::size_t>(n));
        double sum = 0;
        for (Index i = 0; i + 1 < n; ++i) {
            args[std::size_t(i)] = rng.uniform(-pi, pi);
            sum += args[std::size_t(i)];
        }
        args[std::size_t(n - 1)] = theta - sum;
        std::vector<Graph::Edge> edges;
        for (Index i = 0; i < n; ++i)
            edges.push_back({i, (i + 1) % n, std::polar(k, args[std::size_t(i)])});
        Graph scrambled(n, edges);

        auto reference =
            cycle_distance_spectrum_closed(CycleParams<double>{n, k, theta});
        auto numeric = hermitian_eigenvalues(distance_matrix(scrambled).entries);
        CHECK(spectra_close(reference.values, numeric.values, 1e-8));
    }
}

TEST_CASE("unit corollary values by hand: n = 3, theta = 0") {
    auto s = unit_cycle_spectrum_closed(3, 0.0);
    // theta_0 = 0 is singular: fallback gives p(p+1) = 2; the other two are -1
    CHECK(spectra_close(s.values, {-1.0, -1.0, 2.0}, 1e-12));
}

TEST_CASE("unit corollary equals the k = 1 closed form on the grid") {
    for (Index n : {3, 5, 7, 9, 11}) {
        for (double theta : {0.0, pi / 3, 1.0, pi}) {
            auto unit = unit_cycle_spectrum_closed(n, theta);
            auto general = cycle_distance_spectrum_closed(CycleParams<double>{n, 1.0, theta});
            CHECK(spectra_close(unit.values, general.values, 1e-8));
        }
    }
}

TEST_CASE("unit corollary rejects invalid lengths") {
    CHECK_THROWS_AS(unit_cycle_spectrum_closed(4, 0.0), Error);
    CHECK_THROWS_AS(unit_cycle_spectrum_closed(1, 0.0), Error);
}
