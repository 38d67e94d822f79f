#pragma once

#include <cmath>
#include <queue>

#include "csg/distance_matrix.hpp"

namespace csg {

/// Gain of an oriented cycle: the product of edge gains along the traversal.
/// Reversing the cycle conjugates the result.
template <typename Scalar>
Complex<Scalar> cycle_gain(const GainGraph<Scalar>& g, const OrientedCycle& c) {
    const auto& vs = c.vertices;
    if (vs.size() < 3) throw Error(ErrorCode::InvalidCycle, "cycle needs at least 3 vertices");
    std::vector<Index> sorted(vs);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorCode::InvalidCycle, "cycle revisits a vertex");
    Complex<Scalar> prod(1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        Index a = vs[i];
        Index b = vs[(i + 1) % vs.size()];
        if (!g.adjacent(a, b))
            throw Error(ErrorCode::InvalidCycle, "cycle edge (" + std::to_string(a) + "," +
                                                     std::to_string(b) + ") missing");
        prod *= g.gain(a, b);
    }
    return prod;
}

enum class BalanceStatus { balanced, unbalanced };

/// Either a unit-modulus switching function that makes every gain a positive
/// real (balanced), or an oriented cycle whose gain is not a positive real
/// (unbalanced).
template <typename Scalar = double>
struct BalanceCertificate {
    BalanceStatus status = BalanceStatus::balanced;
    std::optional<SwitchingFunction<Scalar>> zeta;
    std::optional<OrientedCycle> witness_cycle;
    std::optional<Complex<Scalar>> witness_gain;

    bool balanced() const { return status == BalanceStatus::balanced; }
};

namespace detail {

// BFS spanning tree: parents and visit order.
template <typename Scalar>
void spanning_tree(const GainGraph<Scalar>& g, std::vector<Index>& parent,
                   std::vector<int>& depth, std::vector<Index>& order) {
    const Index n = g.vertex_count();
    parent.assign(std::size_t(n), -1);
    depth.assign(std::size_t(n), -1);
    order.clear();
    if (n == 0) return;
    depth[0] = 0;
    std::queue<Index> q;
    q.push(0);
    while (!q.empty()) {
        Index v = q.front();
        q.pop();
        order.push_back(v);
        for (auto [w, id] : g.neighbors(v)) {
            if (depth[std::size_t(w)] < 0) {
                depth[std::size_t(w)] = depth[std::size_t(v)] + 1;
                parent[std::size_t(w)] = v;
                q.push(w);
            }
        }
    }
    if (Index(order.size()) != n)
        throw Error(ErrorCode::Disconnected, "balance needs a connected graph");
}

// Fundamental cycle of the non-tree edge (u, v), oriented so the traversal
// crosses that edge as u -> v: v up to the lowest common ancestor, down to u,
// with the closing edge u -> v implicit. Its gain is the offending switched
// gain times a positive real.
inline OrientedCycle fundamental_cycle(const std::vector<Index>& parent,
                                       const std::vector<int>& depth, Index u, Index v) {
    std::vector<Index> up, down;
    Index a = u, b = v;
    while (depth[std::size_t(a)] > depth[std::size_t(b)]) {
        up.push_back(a);
        a = parent[std::size_t(a)];
    }
    while (depth[std::size_t(b)] > depth[std::size_t(a)]) {
        down.push_back(b);
        b = parent[std::size_t(b)];
    }
    while (a != b) {
        up.push_back(a);
        down.push_back(b);
        a = parent[std::size_t(a)];
        b = parent[std::size_t(b)];
    }
    up.push_back(a);  // the LCA
    up.insert(up.end(), down.rbegin(), down.rend());
    std::reverse(up.begin(), up.end());  // [v ... lca ... u], closed by u -> v
    return {std::move(up)};
}

}  // namespace detail

/// Decide balance by the spanning-tree potential method: pick zeta so every
/// tree gain becomes its modulus, then test each non-tree edge's switched
/// gain for positive-real-ness. The first failure yields the fundamental
/// cycle as an unbalance witness.
template <typename Scalar>
BalanceCertificate<Scalar> balance_certificate(const GainGraph<Scalar>& g,
                                               Scalar tol = default_tol<Scalar>) {
    const Index n = g.vertex_count();
    std::vector<Index> parent, order;
    std::vector<int> depth;
    detail::spanning_tree(g, parent, depth, order);

    std::vector<Complex<Scalar>> zeta(std::size_t(n), Complex<Scalar>(1));
    for (Index v : order) {
        if (parent[std::size_t(v)] < 0) continue;
        const Index p = parent[std::size_t(v)];
        const Scalar alpha = std::arg(g.gain(p, v));
        zeta[std::size_t(v)] = zeta[std::size_t(p)] * std::polar(Scalar(1), -alpha);
    }

    for (const auto& e : g.edges()) {
        // tree edges are positive real by construction of zeta
        if (parent[std::size_t(e.v)] == e.u || parent[std::size_t(e.u)] == e.v) continue;
        const Complex<Scalar> switched =
            std::conj(zeta[std::size_t(e.u)]) * e.gain * zeta[std::size_t(e.v)];
        if (is_positive_real(switched, tol)) continue;
        BalanceCertificate<Scalar> cert;
        cert.status = BalanceStatus::unbalanced;
        cert.witness_cycle = detail::fundamental_cycle(parent, depth, e.u, e.v);
        cert.witness_gain = cycle_gain(g, *cert.witness_cycle);
        return cert;
    }

    BalanceCertificate<Scalar> cert;
    cert.status = BalanceStatus::balanced;
    cert.zeta = SwitchingFunction<Scalar>{std::move(zeta)};
    return cert;
}

/// Complete graph on the same vertices whose edge gains are the common
/// shortest-path gain times the hop distance; its adjacency matrix equals the
/// distance matrix of g. Requires a distance-compatible input.
template <typename Scalar>
GainGraph<Scalar> associated_complete_graph(const GainGraph<Scalar>& g,
                                            std::size_t cap = default_gain_cap,
                                            Scalar tol = default_tol<Scalar>) {
    DistanceMatrix<Scalar> d = distance_matrix(g, cap, tol);
    std::vector<typename GainGraph<Scalar>::Edge> edges;
    if (d.n >= 2) edges.reserve(std::size_t(d.n) * (std::size_t(d.n) - 1) / 2);
    for (Index u = 0; u < d.n; ++u)
        for (Index v = u + 1; v < d.n; ++v) edges.push_back({u, v, d.entries(u, v)});
    return GainGraph<Scalar>(d.n, edges);
}

}  // namespace csg
