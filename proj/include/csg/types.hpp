#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>

namespace csg {

using Index = int;

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Default relative comparison tolerance. All approximate equality in this
// library is relative with a floor of 1: |a-b| <= tol * max(1, |a|, |b|).
template <typename Scalar>
inline constexpr Scalar default_tol = Scalar(1e-9);

// Gains below this modulus are rejected at construction time.
template <typename Scalar>
inline constexpr Scalar zero_gain_floor = Scalar(1e-12);

template <typename Scalar>
bool approx_equal(Scalar a, Scalar b, Scalar tol = default_tol<Scalar>) {
    return std::abs(a - b) <= tol * std::max({Scalar(1), std::abs(a), std::abs(b)});
}

template <typename Scalar>
bool approx_equal(const Complex<Scalar>& a, const Complex<Scalar>& b,
                  Scalar tol = default_tol<Scalar>) {
    return std::abs(a - b) <= tol * std::max({Scalar(1), std::abs(a), std::abs(b)});
}

// Lexicographic order on C: compare real parts first, then imaginary parts.
// Real parts within tol (relative, floored at 1) count as equal and defer to
// the imaginary tiebreak.
template <typename Scalar>
bool lex_less(const Complex<Scalar>& a, const Complex<Scalar>& b,
              Scalar tol = default_tol<Scalar>) {
    const Scalar scale = std::max({Scalar(1), std::abs(a), std::abs(b)});
    if (std::abs(a.real() - b.real()) > tol * scale) return a.real() < b.real();
    return a.imag() < b.imag();
}

// z is a positive real within tol: |Im z| <= tol*|z| and Re z > 0.
template <typename Scalar>
bool is_positive_real(const Complex<Scalar>& z, Scalar tol = default_tol<Scalar>) {
    return std::abs(z.imag()) <= tol * std::abs(z) && z.real() > Scalar(0);
}

}  // namespace csg
