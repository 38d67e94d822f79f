#pragma once

#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "csg/structure.hpp"

namespace csg {

inline constexpr std::size_t default_gain_cap = 4096;

/// Distinct gains of shortest oriented paths for one ordered vertex pair,
/// deduplicated at a relative tolerance.
template <typename Scalar = double>
struct GainSet {
    std::vector<Complex<Scalar>> values;
    Scalar dedup_tolerance = default_tol<Scalar>;
    bool truncated = false;  // set when the distinct-gain cap was hit

    void insert(const Complex<Scalar>& z, std::size_t cap) {
        for (const auto& v : values)
            if (approx_equal(v, z, dedup_tolerance)) return;
        if (values.size() >= cap) {
            truncated = true;
            return;
        }
        values.push_back(z);
    }
};

/// BFS hop counts from src. Throws Disconnected when some vertex is
/// unreachable.
template <typename Scalar>
std::vector<int> bfs_distances(const GainGraph<Scalar>& g, Index src) {
    if (src < 0 || src >= g.vertex_count())
        throw Error(ErrorCode::BadVertex, "bfs source out of range");
    auto dist = detail::bfs_raw(g, src);
    for (std::size_t v = 0; v < dist.size(); ++v)
        if (dist[v] < 0)
            throw Error(ErrorCode::Disconnected,
                        "vertex " + std::to_string(v) + " unreachable from " +
                            std::to_string(src));
    return dist;
}

namespace detail {

template <typename Scalar>
struct SourceGains {
    std::vector<int> dist;
    std::vector<GainSet<Scalar>> sets;  // sets[v] = gains of shortest paths src -> v
};

// Dynamic programming over the BFS layered DAG: the gain set at v is the
// dedup-merged union of predecessor sets times the closing edge gain. Path
// counts can blow up exponentially; distinct-gain counts rarely do, and the
// cap turns the pathological case into a reported truncation.
template <typename Scalar>
SourceGains<Scalar> source_gain_sets(const GainGraph<Scalar>& g, Index src,
                                     std::size_t cap = default_gain_cap,
                                     Scalar tol = default_tol<Scalar>) {
    SourceGains<Scalar> r;
    r.dist = bfs_distances(g, src);
    const Index n = g.vertex_count();
    r.sets.assign(std::size_t(n), GainSet<Scalar>{{}, tol, false});

    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index b) { return r.dist[std::size_t(a)] < r.dist[std::size_t(b)]; });

    r.sets[std::size_t(src)].values = {Complex<Scalar>(1)};
    for (Index v : order) {
        const int dv = r.dist[std::size_t(v)];
        if (dv == 0) continue;
        auto& out = r.sets[std::size_t(v)];
        for (auto [u, id] : g.neighbors(v)) {
            if (r.dist[std::size_t(u)] + 1 != dv) continue;
            const auto& in = r.sets[std::size_t(u)];
            if (in.truncated) out.truncated = true;
            const Complex<Scalar> step = g.gain(u, v);
            for (const auto& base : in.values) out.insert(base * step, cap);
        }
    }
    return r;
}

template <typename Scalar>
void require_complete(const GainSet<Scalar>& s, Index u, Index v) {
    if (s.truncated)
        throw Error(ErrorCode::CapExceeded,
                    "distinct shortest-path gains between " + std::to_string(u) + " and " +
                        std::to_string(v) + " exceed the cap")
            .with_witness(u, v);
}

}  // namespace detail

/// Distinct gains over all shortest oriented paths u -> v.
template <typename Scalar>
GainSet<Scalar> shortest_path_gain_set(const GainGraph<Scalar>& g, Index u, Index v,
                                       std::size_t cap = default_gain_cap,
                                       Scalar tol = default_tol<Scalar>) {
    if (u == v) throw Error(ErrorCode::BadVertex, "gain set needs distinct endpoints");
    auto r = detail::source_gain_sets(g, u, cap, tol);
    detail::require_complete(r.sets[std::size_t(v)], u, v);
    return std::move(r.sets[std::size_t(v)]);
}

template <typename Scalar = double>
struct GainExtrema {
    Complex<Scalar> phi_max;
    Complex<Scalar> phi_min;
};

/// Lexicographic extrema of the shortest-path gain set of (u, v).
template <typename Scalar>
GainExtrema<Scalar> gain_extrema(const GainGraph<Scalar>& g, Index u, Index v,
                                 std::size_t cap = default_gain_cap,
                                 Scalar tol = default_tol<Scalar>) {
    GainSet<Scalar> s = shortest_path_gain_set(g, u, v, cap, tol);
    GainExtrema<Scalar> ext{s.values.front(), s.values.front()};
    for (const auto& z : s.values) {
        if (lex_less(ext.phi_max, z, tol)) ext.phi_max = z;
        if (lex_less(z, ext.phi_min, tol)) ext.phi_min = z;
    }
    return ext;
}

template <typename Scalar = double>
struct PairCompatibility {
    bool argument_wise = true;
    bool modulus_wise = true;
    // first offending gain pair per failed property
    std::optional<std::pair<Complex<Scalar>, Complex<Scalar>>> argument_witness;
    std::optional<std::pair<Complex<Scalar>, Complex<Scalar>>> modulus_witness;

    bool distance_compatible() const { return argument_wise && modulus_wise; }
};

namespace detail {

// Argument-wise: every gain ratio is a positive real (branch-cut-free
// equivalent of equal arguments mod 2*pi). Modulus-wise: one shared modulus.
template <typename Scalar>
PairCompatibility<Scalar> classify_gain_set(const std::vector<Complex<Scalar>>& values,
                                            Scalar tol) {
    PairCompatibility<Scalar> c;
    for (std::size_t i = 0; i < values.size() && (c.argument_wise || c.modulus_wise); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            if (c.argument_wise && !is_positive_real(values[i] / values[j], tol)) {
                c.argument_wise = false;
                c.argument_witness = {{values[i], values[j]}};
            }
            if (c.modulus_wise &&
                !approx_equal(std::abs(values[i]), std::abs(values[j]), tol)) {
                c.modulus_wise = false;
                c.modulus_witness = {{values[i], values[j]}};
            }
        }
    }
    return c;
}

}  // namespace detail

/// Compatibility flags for one pair of distinct vertices.
template <typename Scalar>
PairCompatibility<Scalar> pair_compatibility(const GainGraph<Scalar>& g, Index u, Index v,
                                             std::size_t cap = default_gain_cap,
                                             Scalar tol = default_tol<Scalar>) {
    GainSet<Scalar> s = shortest_path_gain_set(g, u, v, cap, tol);
    return detail::classify_gain_set(s.values, tol);
}

template <typename Scalar = double>
struct CompatibilityWitness {
    Index u;
    Index v;
    Complex<Scalar> gain_a;
    Complex<Scalar> gain_b;
};

template <typename Scalar = double>
struct CompatibilityReport {
    Index n = 0;
    bool graph_argument_wise = true;
    bool graph_modulus_wise = true;
    bool graph_distance_compatible = true;
    std::optional<CompatibilityWitness<Scalar>> argument_witness;
    std::optional<CompatibilityWitness<Scalar>> modulus_witness;

    struct Flags {
        bool argument_wise = true;
        bool modulus_wise = true;
    };

    // Flags per unordered pair; both orders report identically (gain sets of
    // reversed pairs are elementwise conjugate).
    const Flags& pair(Index u, Index v) const {
        return flags_[std::size_t(u) * std::size_t(n) + std::size_t(v)];
    }

    std::vector<Flags> flags_;
};

/// Classify every vertex pair of a connected graph.
template <typename Scalar>
CompatibilityReport<Scalar> compatibility_report(const GainGraph<Scalar>& g,
                                                 std::size_t cap = default_gain_cap,
                                                 Scalar tol = default_tol<Scalar>) {
    const Index n = g.vertex_count();
    if (!is_connected(g))
        throw Error(ErrorCode::Disconnected, "compatibility needs a connected graph");
    CompatibilityReport<Scalar> rep;
    rep.n = n;
    rep.flags_.assign(std::size_t(n) * std::size_t(n), {});
    for (Index u = 0; u + 1 < n; ++u) {
        auto src = detail::source_gain_sets(g, u, cap, tol);
        for (Index v = u + 1; v < n; ++v) {
            detail::require_complete(src.sets[std::size_t(v)], u, v);
            auto c = detail::classify_gain_set(src.sets[std::size_t(v)].values, tol);
            auto& fwd = rep.flags_[std::size_t(u) * std::size_t(n) + std::size_t(v)];
            auto& rev = rep.flags_[std::size_t(v) * std::size_t(n) + std::size_t(u)];
            fwd = rev = {c.argument_wise, c.modulus_wise};
            if (!c.argument_wise && !rep.argument_witness)
                rep.argument_witness = {u, v, c.argument_witness->first,
                                        c.argument_witness->second};
            if (!c.modulus_wise && !rep.modulus_witness)
                rep.modulus_witness = {u, v, c.modulus_witness->first,
                                       c.modulus_witness->second};
            rep.graph_argument_wise &= c.argument_wise;
            rep.graph_modulus_wise &= c.modulus_wise;
        }
    }
    rep.graph_distance_compatible = rep.graph_argument_wise && rep.graph_modulus_wise;
    return rep;
}

}  // namespace csg
