#pragma once

#include <Eigen/Eigenvalues>

#include <bit>
#include <cstdint>

#include "csg/balance.hpp"

namespace csg {

/// Real eigenvalues sorted ascending; tolerance is the per-eigenvalue
/// accuracy bound 1e-9 * (1 + n * max|entry|).
template <typename Scalar = double>
struct Spectrum {
    std::vector<Scalar> values;
    Scalar tolerance = Scalar(0);
};

/// Monic characteristic polynomial, coefficients in degree-descending order
/// (coeffs[0] = 1).
template <typename Scalar = double>
struct CharPoly {
    std::vector<Scalar> coeffs;

    Scalar eval(Scalar x) const {
        Scalar acc(0);
        for (Scalar c : coeffs) acc = acc * x + c;
        return acc;
    }
};

inline constexpr Index char_poly_max_dim = 64;
inline constexpr Index elementary_max_order = 12;

/// Eigenvalues of a Hermitian matrix, ascending.
template <typename Derived>
Spectrum<typename Eigen::NumTraits<typename Derived::Scalar>::Real> hermitian_eigenvalues(
    const Eigen::MatrixBase<Derived>& m,
    typename Eigen::NumTraits<typename Derived::Scalar>::Real hermitian_tol =
        typename Eigen::NumTraits<typename Derived::Scalar>::Real(1e-8)) {
    using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
    if (m.rows() != m.cols())
        throw Error(ErrorCode::DimensionMismatch, "eigenvalues need a square matrix");
    if (!is_hermitian(m, hermitian_tol))
        throw Error(ErrorCode::NotHermitian, "matrix is not Hermitian within tolerance");
    if (m.rows() == 0) return Spectrum<Real>{{}, Real(1e-9)};
    Eigen::SelfAdjointEigenSolver<typename Derived::PlainObject> solver(
        m.derived(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw Error(ErrorCode::NoConvergence, "eigenvalue iteration did not converge");
    Spectrum<Real> s;
    s.values.assign(solver.eigenvalues().data(),
                    solver.eigenvalues().data() + solver.eigenvalues().size());
    const Real norm = Real(m.cwiseAbs().maxCoeff()) * Real(m.rows());
    s.tolerance = Real(1e-9) * (Real(1) + norm);
    return s;
}

/// Characteristic polynomial by the Faddeev-LeVerrier trace recurrence.
/// Coefficients of a Hermitian input are real; an imaginary residue above
/// 1e-8 (relative) is an error rather than a silent truncation.
template <typename Derived>
CharPoly<typename Eigen::NumTraits<typename Derived::Scalar>::Real> char_poly(
    const Eigen::MatrixBase<Derived>& m) {
    using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
    using C = std::complex<Real>;
    using CMat = Eigen::Matrix<C, Eigen::Dynamic, Eigen::Dynamic>;
    if (m.rows() != m.cols())
        throw Error(ErrorCode::DimensionMismatch, "char poly needs a square matrix");
    const Eigen::Index n = m.rows();
    if (n > char_poly_max_dim)
        throw Error(ErrorCode::DimensionTooLarge,
                    "char poly limited to dimension " + std::to_string(char_poly_max_dim));

    const CMat a = m.derived().template cast<C>();
    CMat mk = a;
    std::vector<C> c(std::size_t(n) + 1);
    c[0] = C(1);
    for (Eigen::Index k = 1; k <= n; ++k) {
        const C ck = -mk.trace() / Real(k);
        c[std::size_t(k)] = ck;
        if (k < n) mk = a * (mk + ck * CMat::Identity(n, n));
    }

    CharPoly<Real> p;
    p.coeffs.reserve(c.size());
    for (const C& ck : c) {
        if (std::abs(ck.imag()) > Real(1e-8) * std::max(Real(1), std::abs(ck)))
            throw Error(ErrorCode::NonRealCoefficient,
                        "characteristic coefficient has imaginary residue " +
                            std::to_string(ck.imag()));
        p.coeffs.push_back(ck.real());
    }
    return p;
}

namespace detail {

// Exhaustive enumeration of elementary subgraphs (components are single edges
// or cycles), assembled component by component in increasing order of their
// minimum vertex. Each subgraph of order i adds
// (-1)^components * 2^cycles * prod |gain(e)|^2 * prod Re(gain(C)) to a_i.
template <typename Scalar>
struct ElementaryEnumerator {
    const GainGraph<Scalar>& g;
    Index n;
    std::vector<Scalar>& coeffs;
    std::vector<Index> path;

    void contribute(std::uint32_t mask, int comps, int cycles, Scalar weight) {
        const Scalar sign = (comps & 1) ? Scalar(-1) : Scalar(1);
        coeffs[std::size_t(std::popcount(mask))] +=
            sign * Scalar(std::uint32_t(1) << cycles) * weight;
    }

    // Extend cycles anchored at path[0] (the component's minimum vertex).
    void cycle_dfs(std::uint32_t used, std::uint32_t path_mask, Complex<Scalar> prod,
                   int comps, int cycles, Scalar weight) {
        const Index anchor = path.front();
        const Index cur = path.back();
        for (auto [x, id] : g.neighbors(cur)) {
            if (x == anchor && path.size() >= 3 && path[1] < cur) {
                const Complex<Scalar> cyc = prod * g.gain(cur, anchor);
                std::vector<Index> saved = path;  // recurse reuses the path buffer
                recurse(anchor + 1, used | path_mask, comps + 1, cycles + 1,
                        weight * cyc.real());
                path = std::move(saved);
            } else if (x > anchor && !((used | path_mask) & (std::uint32_t(1) << x))) {
                path.push_back(x);
                cycle_dfs(used, path_mask | (std::uint32_t(1) << x),
                          prod * g.gain(cur, x), comps, cycles, weight);
                path.pop_back();
            }
        }
    }

    void recurse(Index next_min, std::uint32_t used, int comps, int cycles, Scalar weight) {
        contribute(used, comps, cycles, weight);
        for (Index v = next_min; v < n; ++v) {
            if (used & (std::uint32_t(1) << v)) continue;
            // component = a single edge (v, u), u > v
            for (auto [u, id] : g.neighbors(v)) {
                if (u <= v || (used & (std::uint32_t(1) << u))) continue;
                const Scalar w2 = std::norm(g.gain(v, u));
                recurse(v + 1, used | (std::uint32_t(1) << v) | (std::uint32_t(1) << u),
                        comps + 1, cycles, weight * w2);
            }
            // component = a cycle with minimum vertex v, counted once per
            // undirected cycle (first step below last step)
            path.assign(1, v);
            cycle_dfs(used, std::uint32_t(1) << v, Complex<Scalar>(1), comps, cycles, weight);
        }
    }
};

}  // namespace detail

/// Characteristic polynomial of the adjacency matrix via elementary-subgraph
/// enumeration. Exponential and exact; gated at order 12.
template <typename Scalar>
CharPoly<Scalar> char_poly_elementary(const GainGraph<Scalar>& g) {
    const Index n = g.vertex_count();
    if (n > elementary_max_order)
        throw Error(ErrorCode::DimensionTooLarge,
                    "elementary enumeration limited to order " +
                        std::to_string(elementary_max_order));
    CharPoly<Scalar> p;
    p.coeffs.assign(std::size_t(n) + 1, Scalar(0));
    detail::ElementaryEnumerator<Scalar> en{g, n, p.coeffs, {}};
    en.recurse(0, 0, 0, 0, Scalar(1));
    return p;
}

/// Sorted spectra agree elementwise within tol.
template <typename DerivedA, typename DerivedB>
bool cospectral(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
                typename Eigen::NumTraits<typename DerivedA::Scalar>::Real tol) {
    using Real = typename Eigen::NumTraits<typename DerivedA::Scalar>::Real;
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorCode::DimensionMismatch, "cospectral needs equal dimensions");
    auto sa = hermitian_eigenvalues(a);
    auto sb = hermitian_eigenvalues(b);
    for (std::size_t i = 0; i < sa.values.size(); ++i)
        if (!approx_equal(sa.values[i], sb.values[i], Real(tol))) return false;
    return true;
}

/// The distance-matrix balance test: true iff D(g) exists and is cospectral
/// with the distance matrix of the magnitude graph. Equivalent to balanced
/// plus modulus-wise compatible.
template <typename Scalar>
bool balance_via_distance_cospectrality(const GainGraph<Scalar>& g,
                                        std::size_t cap = default_gain_cap,
                                        Scalar tol = default_tol<Scalar>) {
    DistanceMatrix<Scalar> d;
    try {
        d = distance_matrix(g, cap, tol);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NotDistanceCompatible) return false;
        throw;
    }
    DistanceMatrix<Scalar> dm = distance_matrix(magnitude_graph(g), cap, tol);
    return cospectral(d.entries, dm.entries, Scalar(1e-8));
}

}  // namespace csg
