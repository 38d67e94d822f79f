#pragma once

#include "csg/shortest_gains.hpp"

namespace csg {

enum class DistanceKind { max, min, compatible };

inline const char* distance_kind_name(DistanceKind k) {
    switch (k) {
        case DistanceKind::max: return "max";
        case DistanceKind::min: return "min";
        case DistanceKind::compatible: return "compatible";
    }
    return "?";
}

/// Dense complex distance matrix: entry (u, v) is an extremal (or the common)
/// shortest-path gain times the hop distance. Zero diagonal. The max/min
/// variants are computed independently per ordered pair and may be
/// non-Hermitian on incompatible graphs; the hermitian flag records the check.
template <typename Scalar = double>
struct DistanceMatrix {
    Index n = 0;
    ComplexMatrix<Scalar> entries;
    DistanceKind kind = DistanceKind::compatible;
    bool hermitian = false;
};

/// entry(v,u) == conj(entry(u,v)) within tol for all pairs.
template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m,
                  typename Eigen::NumTraits<typename Derived::Scalar>::Real tol) {
    using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
    if (m.rows() != m.cols()) return false;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = i; j < m.cols(); ++j) {
            using std::abs;
            const auto a = m(i, j);
            const auto b = m(j, i);
            const Real scale = std::max({Real(1), Real(abs(a)), Real(abs(b))});
            if (abs(a - Eigen::numext::conj(b)) > tol * scale) return false;
        }
    }
    return true;
}

template <typename Scalar>
bool is_hermitian(const DistanceMatrix<Scalar>& m, Scalar tol) {
    return is_hermitian(m.entries, tol);
}

namespace detail {

template <typename Scalar, typename PickGain>
DistanceMatrix<Scalar> distance_matrix_impl(const GainGraph<Scalar>& g, DistanceKind kind,
                                            std::size_t cap, Scalar tol, PickGain pick) {
    const Index n = g.vertex_count();
    DistanceMatrix<Scalar> d;
    d.n = n;
    d.kind = kind;
    d.entries = ComplexMatrix<Scalar>::Zero(n, n);
    for (Index u = 0; u < n; ++u) {
        auto src = source_gain_sets(g, u, cap, tol);
        for (Index v = 0; v < n; ++v) {
            if (v == u) continue;
            require_complete(src.sets[std::size_t(v)], u, v);
            d.entries(u, v) =
                pick(src.sets[std::size_t(v)].values) * Scalar(src.dist[std::size_t(v)]);
        }
    }
    d.hermitian = is_hermitian(d.entries, tol);
    return d;
}

}  // namespace detail

/// D^max: entry (u,v) = lexicographic-max shortest-path gain times distance.
template <typename Scalar>
DistanceMatrix<Scalar> distance_matrix_max(const GainGraph<Scalar>& g,
                                           std::size_t cap = default_gain_cap,
                                           Scalar tol = default_tol<Scalar>) {
    return detail::distance_matrix_impl(
        g, DistanceKind::max, cap, tol, [tol](const std::vector<Complex<Scalar>>& vals) {
            Complex<Scalar> best = vals.front();
            for (const auto& z : vals)
                if (lex_less(best, z, tol)) best = z;
            return best;
        });
}

/// D^min: as above with the lexicographic minimum.
template <typename Scalar>
DistanceMatrix<Scalar> distance_matrix_min(const GainGraph<Scalar>& g,
                                           std::size_t cap = default_gain_cap,
                                           Scalar tol = default_tol<Scalar>) {
    return detail::distance_matrix_impl(
        g, DistanceKind::min, cap, tol, [tol](const std::vector<Complex<Scalar>>& vals) {
            Complex<Scalar> best = vals.front();
            for (const auto& z : vals)
                if (lex_less(z, best, tol)) best = z;
            return best;
        });
}

/// The common distance matrix D of a distance-compatible graph. Fails fast
/// with the offending pair when the graph is not compatible.
template <typename Scalar>
DistanceMatrix<Scalar> distance_matrix(const GainGraph<Scalar>& g,
                                       std::size_t cap = default_gain_cap,
                                       Scalar tol = default_tol<Scalar>) {
    auto rep = compatibility_report(g, cap, tol);
    if (!rep.graph_distance_compatible) {
        const auto& w = rep.argument_witness ? *rep.argument_witness : *rep.modulus_witness;
        throw Error(ErrorCode::NotDistanceCompatible,
                    "pair (" + std::to_string(w.u) + "," + std::to_string(w.v) +
                        ") has non-equivalent shortest-path gains")
            .with_witness(w.u, w.v);
    }
    auto d = detail::distance_matrix_impl(
        g, DistanceKind::compatible, cap, tol,
        [](const std::vector<Complex<Scalar>>& vals) { return vals.front(); });
    return d;
}

}  // namespace csg
