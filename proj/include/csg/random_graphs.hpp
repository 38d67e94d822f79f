#pragma once

#include <cstdint>
#include <numbers>
#include <random>
#include <string>

#include "csg/gain_graph.hpp"

namespace csg {

enum class GainModel { unit, annulus, positive_real, balanced };

inline const char* gain_model_name(GainModel m) {
    switch (m) {
        case GainModel::unit: return "unit";
        case GainModel::annulus: return "annulus";
        case GainModel::positive_real: return "positive-real";
        case GainModel::balanced: return "balanced";
    }
    return "?";
}

/// Seeded gain-drawing model. Same seed and parameters give the identical
/// graph, bit for bit.
template <typename Scalar = double>
struct RandomModel {
    GainModel kind = GainModel::unit;
    Scalar modulus_min = Scalar(0.5);
    Scalar modulus_max = Scalar(2);
    Scalar arg_min = Scalar(0);
    Scalar arg_max = Scalar(2) * std::numbers::pi_v<Scalar>;
    std::uint64_t seed = 0;
};

// mt19937_64 with hand-rolled draws; std::uniform_* distributions are
// implementation-defined and would break the determinism contract.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() { return double(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        while (true) {
            const std::uint64_t x = eng_();
            if (x >= threshold) return x % n;
        }
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 eng_;
};

template <typename Scalar>
Complex<Scalar> random_gain(const RandomModel<Scalar>& model, Rng& rng) {
    switch (model.kind) {
        case GainModel::unit:
            return std::polar(Scalar(1), Scalar(rng.uniform(double(model.arg_min),
                                                            double(model.arg_max))));
        case GainModel::annulus:
            return std::polar(
                Scalar(rng.uniform(double(model.modulus_min), double(model.modulus_max))),
                Scalar(rng.uniform(double(model.arg_min), double(model.arg_max))));
        case GainModel::positive_real:
        case GainModel::balanced:
            return Complex<Scalar>(
                Scalar(rng.uniform(double(model.modulus_min), double(model.modulus_max))),
                Scalar(0));
    }
    return Complex<Scalar>(1);
}

template <typename Scalar>
SwitchingFunction<Scalar> random_switching(Index n, std::uint64_t seed) {
    Rng rng(seed);
    SwitchingFunction<Scalar> sw;
    sw.zeta.reserve(std::size_t(n));
    for (Index v = 0; v < n; ++v)
        sw.zeta.push_back(std::polar(Scalar(1), Scalar(rng.uniform(0.0, 2 * std::numbers::pi))));
    return sw;
}

/// Connected random graph: a random spanning tree plus m-(n-1) extra edges,
/// gains drawn per model. The balanced model draws positive reals and then
/// hides them behind a random unit switching.
template <typename Scalar>
GainGraph<Scalar> random_csg(const RandomModel<Scalar>& model, Index n, Index m) {
    if (n < 1) throw Error(ErrorCode::BadVertex, "need at least one vertex");
    const long long max_edges = (long long)(n) * (n - 1) / 2;
    if (m < n - 1 || (long long)m > max_edges)
        throw Error(ErrorCode::BadEdgeCount, "edge count " + std::to_string(m) +
                                                 " outside [" + std::to_string(n - 1) + "," +
                                                 std::to_string(max_edges) + "]");
    Rng rng(model.seed);
    std::vector<typename GainGraph<Scalar>::Edge> edges;
    edges.reserve(std::size_t(m));
    std::vector<std::vector<bool>> present(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (Index v = 1; v < n; ++v) {
        const Index u = Index(rng.below(std::uint64_t(v)));
        edges.push_back({u, v, random_gain(model, rng)});
        present[std::size_t(u)][std::size_t(v)] = true;
    }
    std::vector<std::pair<Index, Index>> rest;
    for (Index u = 0; u < n; ++u)
        for (Index v = u + 1; v < n; ++v)
            if (!present[std::size_t(u)][std::size_t(v)]) rest.push_back({u, v});
    rng.shuffle(rest);
    for (Index i = 0; i < m - (n - 1); ++i) {
        auto [u, v] = rest[std::size_t(i)];
        edges.push_back({u, v, random_gain(model, rng)});
    }
    GainGraph<Scalar> g(n, edges);
    if (model.kind != GainModel::balanced) return g;
    SwitchingFunction<Scalar> sw;
    sw.zeta.reserve(std::size_t(n));
    for (Index v = 0; v < n; ++v)
        sw.zeta.push_back(std::polar(Scalar(1), Scalar(rng.uniform(0.0, 2 * std::numbers::pi))));
    return apply_switching(g, sw);
}

}  // namespace csg
