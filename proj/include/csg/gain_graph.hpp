#pragma once

#include <cmath>
#include <set>
#include <utility>
#include <vector>

#include "csg/errors.hpp"
#include "csg/types.hpp"

namespace csg {

/// Simple undirected graph on vertices 0..n-1 with a nonzero complex gain per
/// oriented edge. Reversing an orientation conjugates the gain. Each edge is
/// stored once in its canonical orientation (lower index -> higher index); the
/// reverse gain is computed on query, never stored. Immutable after build.
template <typename Scalar = double>
class GainGraph {
public:
    using C = Complex<Scalar>;

    // Orientation is as given: gain = phi(u -> v).
    struct Edge {
        Index u;
        Index v;
        C gain;
    };

    GainGraph() = default;

    GainGraph(Index n, const std::vector<Edge>& edge_list) : n_(n), adj_(std::size_t(n)) {
        if (n < 0) throw Error(ErrorCode::BadVertex, "negative vertex count");
        std::set<std::pair<Index, Index>> seen;
        edges_.reserve(edge_list.size());
        for (const Edge& e : edge_list) {
            if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
                throw Error(ErrorCode::BadVertex,
                            "edge endpoint out of range: (" + std::to_string(e.u) + "," +
                                std::to_string(e.v) + ")");
            if (e.u == e.v)
                throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
            if (!std::isfinite(e.gain.real()) || !std::isfinite(e.gain.imag()) ||
                std::abs(e.gain) <= zero_gain_floor<Scalar>)
                throw Error(ErrorCode::ZeroGain, "gain must be finite and nonzero on edge (" +
                                                     std::to_string(e.u) + "," +
                                                     std::to_string(e.v) + ")");
            Edge canon = e.u < e.v ? e : Edge{e.v, e.u, std::conj(e.gain)};
            if (!seen.insert({canon.u, canon.v}).second)
                throw Error(ErrorCode::DuplicateEdge, "duplicate edge (" + std::to_string(e.u) +
                                                          "," + std::to_string(e.v) + ")");
            Index id = Index(edges_.size());
            edges_.push_back(canon);
            adj_[std::size_t(canon.u)].push_back({canon.v, id});
            adj_[std::size_t(canon.v)].push_back({canon.u, id});
        }
    }

    Index vertex_count() const { return n_; }
    Index edge_count() const { return Index(edges_.size()); }

    // Canonically oriented edges (u < v, gain = phi(u -> v)).
    const std::vector<Edge>& edges() const { return edges_; }

    // (neighbor, edge id) pairs, in edge insertion order.
    const std::vector<std::pair<Index, Index>>& neighbors(Index v) const {
        check_vertex(v);
        return adj_[std::size_t(v)];
    }

    Index degree(Index v) const { return Index(neighbors(v).size()); }

    bool adjacent(Index u, Index v) const {
        check_vertex(u);
        check_vertex(v);
        for (auto [w, id] : adj_[std::size_t(u)])
            if (w == v) return true;
        return false;
    }

    /// phi(u -> v); the reverse query returns the conjugate.
    C gain(Index u, Index v) const {
        check_vertex(u);
        check_vertex(v);
        for (auto [w, id] : adj_[std::size_t(u)]) {
            if (w == v) {
                const Edge& e = edges_[std::size_t(id)];
                return e.u == u ? e.gain : std::conj(e.gain);
            }
        }
        throw Error(ErrorCode::NotAdjacent, "no edge (" + std::to_string(u) + "," +
                                                std::to_string(v) + ")");
    }

private:
    void check_vertex(Index v) const {
        if (v < 0 || v >= n_)
            throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(v) + " out of range");
    }

    Index n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<Index, Index>>> adj_;
};

/// Per-vertex switching values; must lie on the unit circle.
template <typename Scalar = double>
struct SwitchingFunction {
    std::vector<Complex<Scalar>> zeta;
};

/// Closed vertex sequence v0 v1 ... vk with vk adjacent to v0; all distinct.
struct OrientedCycle {
    std::vector<Index> vertices;
};

template <typename Scalar>
GainGraph<Scalar> build_graph(Index n,
                              const std::vector<typename GainGraph<Scalar>::Edge>& edges) {
    return GainGraph<Scalar>(n, edges);
}

/// Switch gains by phi^zeta(u->v) = conj(zeta(u)) * phi(u->v) * zeta(v).
/// Same topology; gain moduli are preserved.
template <typename Scalar>
GainGraph<Scalar> apply_switching(const GainGraph<Scalar>& g,
                                  const SwitchingFunction<Scalar>& sw,
                                  Scalar tol = default_tol<Scalar>) {
    if (Index(sw.zeta.size()) != g.vertex_count())
        throw Error(ErrorCode::LengthMismatch,
                    "switching function has " + std::to_string(sw.zeta.size()) +
                        " values for " + std::to_string(g.vertex_count()) + " vertices");
    for (std::size_t i = 0; i < sw.zeta.size(); ++i)
        if (std::abs(std::abs(sw.zeta[i]) - Scalar(1)) > tol)
            throw Error(ErrorCode::NonUnitModulus,
                        "zeta(" + std::to_string(i) + ") is off the unit circle");
    std::vector<typename GainGraph<Scalar>::Edge> switched;
    switched.reserve(std::size_t(g.edge_count()));
    for (const auto& e : g.edges())
        switched.push_back({e.u, e.v,
                            std::conj(sw.zeta[std::size_t(e.u)]) * e.gain *
                                sw.zeta[std::size_t(e.v)]});
    return GainGraph<Scalar>(g.vertex_count(), switched);
}

/// Replace every gain by its modulus. Idempotent.
template <typename Scalar>
GainGraph<Scalar> magnitude_graph(const GainGraph<Scalar>& g) {
    std::vector<typename GainGraph<Scalar>::Edge> mags;
    mags.reserve(std::size_t(g.edge_count()));
    for (const auto& e : g.edges())
        mags.push_back({e.u, e.v, Complex<Scalar>(std::abs(e.gain), Scalar(0))});
    return GainGraph<Scalar>(g.vertex_count(), mags);
}

}  // namespace csg
