#pragma once

#include <numbers>
#include <type_traits>

#include "csg/spectra.hpp"

namespace csg {

/// Parameters of an odd cycle with constant gain modulus k and cycle-gain
/// argument theta: n = 2p+1 vertices, gains on the circle of radius k.
template <typename Scalar = double>
struct CycleParams {
    Index n = 3;
    Scalar k = Scalar(1);
    Scalar theta = Scalar(0);
};

namespace detail {

// Internal evaluations run in extended precision; the closed form cancels
// heavily near the singular set and plain double loses up to ~7 digits there.
template <typename Scalar>
using promoted_t =
    std::conditional_t<std::is_floating_point_v<Scalar> && sizeof(Scalar) <= sizeof(double),
                       long double, Scalar>;

template <typename Scalar>
void check_cycle_params(const CycleParams<Scalar>& params) {
    if (params.n < 3)
        throw Error(ErrorCode::InvalidCycle, "cycle length must be at least 3");
    if (params.n % 2 == 0)
        throw Error(ErrorCode::EvenLength, "cycle length must be odd");
    if (!(params.k > Scalar(0)) || !std::isfinite(params.k))
        throw Error(ErrorCode::BadModulus, "gain modulus must be a positive real");
    if (!std::isfinite(params.theta))
        throw Error(ErrorCode::BadModulus, "cycle-gain argument must be finite");
}

}  // namespace detail

/// Direct evaluation of sum_{r=1..p} r k^r cos(r theta). Exact up to plain
/// rounding for any theta; the oracle and singular-denominator fallback for
/// the closed form below.
template <typename Scalar>
Scalar agp_sum_direct(int p, Scalar k, Scalar theta) {
    Scalar s(0), kr(1);
    for (int r = 1; r <= p; ++r) {
        kr *= k;
        s += Scalar(r) * kr * std::cos(Scalar(r) * theta);
    }
    return s;
}

/// g(theta) = (1 - 2k cos theta + k^2)^2; vanishes iff k = 1 and
/// theta = 0 mod 2*pi.
template <typename Scalar>
Scalar agp_denominator(Scalar k, Scalar theta) {
    const Scalar base = Scalar(1) - Scalar(2) * k * std::cos(theta) + k * k;
    return base * base;
}

template <typename Scalar>
bool agp_singular(Scalar k, Scalar theta) {
    const Scalar unit = (Scalar(1) + k * k) * (Scalar(1) + k * k);
    return std::abs(agp_denominator(k, theta)) <= Scalar(1e-12) * unit;
}

/// Closed form of the arithmetico-geometric cosine sum, f(theta)/g(theta):
///   f = p k^{p+2} cos((p+2)t) - k^{p+1} (p(2k^2+1)+1) cos((p+1)t)
///     + k^{p+2} (p(k^2+2)+2) cos(pt) - (p+1) k^{p+3} cos((p-1)t)
///     + k (k^2+1) cos t - 2 k^2
template <typename Scalar>
Scalar agp_sum_closed(int p, Scalar k, Scalar theta) {
    if (agp_singular(k, theta))
        throw Error(ErrorCode::SingularDenominator,
                    "g(theta) vanishes; evaluate the direct sum instead");
    if (p < 1) return Scalar(0);
    using P = detail::promoted_t<Scalar>;
    const P kk = P(k), t = P(theta), pp = P(p);
    P kpow = P(1);  // k^p
    for (int r = 0; r < p; ++r) kpow *= kk;
    const P k2 = kk * kk;
    const P f = pp * kpow * k2 * std::cos((pp + 2) * t) -
                kpow * kk * (pp * (2 * k2 + 1) + 1) * std::cos((pp + 1) * t) +
                kpow * k2 * (pp * (k2 + 2) + 2) * std::cos(pp * t) -
                (pp + 1) * kpow * k2 * kk * std::cos((pp - 1) * t) +
                kk * (k2 + 1) * std::cos(t) - 2 * k2;
    const P base = P(1) - 2 * kk * std::cos(t) + k2;
    return Scalar(f / (base * base));
}

/// The cycle v0...v_{n-1} with gain k on every edge except the closing edge
/// v_{n-1} -> v0, which carries k e^{i theta}; the cycle gain is k^n e^{i theta}.
template <typename Scalar>
GainGraph<Scalar> canonical_odd_cycle(const CycleParams<Scalar>& params) {
    detail::check_cycle_params(params);
    std::vector<typename GainGraph<Scalar>::Edge> edges;
    edges.reserve(std::size_t(params.n));
    for (Index i = 0; i + 1 < params.n; ++i)
        edges.push_back({i, i + 1, Complex<Scalar>(params.k, Scalar(0))});
    edges.push_back({params.n - 1, 0, std::polar(params.k, params.theta)});
    return GainGraph<Scalar>(params.n, edges);
}

namespace detail {

template <typename Scalar, typename PerAngle>
Spectrum<Scalar> cycle_spectrum(Index n, Scalar theta, PerAngle eigenvalue_at) {
    Spectrum<Scalar> s;
    s.values.reserve(std::size_t(n));
    using P = promoted_t<Scalar>;
    const P two_pi = 2 * std::numbers::pi_v<P>;
    for (Index j = 0; j < n; ++j) {
        const Scalar theta_j = Scalar((two_pi * P(j) + P(theta)) / P(n));
        s.values.push_back(eigenvalue_at(theta_j));
    }
    std::sort(s.values.begin(), s.values.end());
    Scalar maxabs(0);
    for (Scalar v : s.values) maxabs = std::max(maxabs, std::abs(v));
    s.tolerance = Scalar(1e-9) * (Scalar(1) + maxabs);
    return s;
}

}  // namespace detail

/// Distance spectrum of the odd cycle with gain modulus k and cycle-gain
/// argument theta: lambda_j = 2 f(theta_j)/g(theta_j) with
/// theta_j = (2 pi j + theta)/n. Singular angles fall back to the direct sum.
template <typename Scalar>
Spectrum<Scalar> cycle_distance_spectrum_closed(const CycleParams<Scalar>& params) {
    detail::check_cycle_params(params);
    const int p = (params.n - 1) / 2;
    const Scalar k = params.k;
    return detail::cycle_spectrum(params.n, params.theta, [&](Scalar theta_j) {
        if (agp_singular(k, theta_j)) return Scalar(2) * agp_sum_direct(p, k, theta_j);
        return Scalar(2) * agp_sum_closed(p, k, theta_j);
    });
}

/// Unit-gain specialization (k = 1) in its sine form:
///   lambda_j = [n sin(n t/2) - p sin((n+2)t/2) - (p+1) sin((n-2)t/2)
///               - 2 sin(t/2)] / (4 sin^3(t/2)),  t = theta_j.
/// Angles at 0 mod 2*pi fall back to the direct sum (value p(p+1)).
template <typename Scalar>
Spectrum<Scalar> unit_cycle_spectrum_closed(Index n, Scalar theta) {
    detail::check_cycle_params(CycleParams<Scalar>{n, Scalar(1), theta});
    const int p = (n - 1) / 2;
    return detail::cycle_spectrum(n, theta, [&](Scalar theta_j) {
        if (agp_singular(Scalar(1), theta_j))
            return Scalar(2) * agp_sum_direct(p, Scalar(1), theta_j);
        using P = detail::promoted_t<Scalar>;
        const P t = P(theta_j), half = t / 2;
        const P num = P(n) * std::sin(P(n) * half) - P(p) * std::sin((P(n) + 2) * half) -
                      P(p + 1) * std::sin((P(n) - 2) * half) - 2 * std::sin(half);
        const P den = 4 * std::sin(half) * std::sin(half) * std::sin(half);
        return Scalar(num / den);
    });
}

}  // namespace csg
