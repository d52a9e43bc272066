#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "drmt/errors.hpp"

namespace drmt {

/// Real 2x2 matrix [[a, b], [c, d]].
struct Matrix2 {
    double a{1}, b{0}, c{0}, d{1};

    static constexpr Matrix2 identity() { return {1, 0, 0, 1}; }

    double det() const { return a * d - b * c; }
    double frobenius_sq() const { return a * a + b * b + c * c + d * d; }
    double frobenius() const { return std::sqrt(frobenius_sq()); }

    /// Operator (spectral) norm.
    double op_norm() const {
        // singular values from the 2x2 Gram invariants
        const double f = frobenius_sq();
        const double dt = det();
        const double disc = std::sqrt(std::max(0.0, f * f - 4.0 * dt * dt));
        return std::sqrt(0.5 * (f + disc));
    }

    /// Inverse assuming det == 1 (adjugate).
    Matrix2 inverse_unimodular() const { return {d, -b, -c, a}; }

    Matrix2 inverse() const {
        const double dt = det();
        if (dt == 0.0 || !std::isfinite(dt)) throw NumericalError("Matrix2::inverse: singular matrix");
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    bool finite() const {
        return std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d);
    }

    Matrix2 scaled(double s) const { return {a * s, b * s, c * s, d * s}; }

    friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

/// Matrix product A*B. Flags overflow when any entry exceeds 1e300 in
/// magnitude; callers accumulating long products must renormalize.
inline Matrix2 compose(const Matrix2& A, const Matrix2& B) {
    Matrix2 r{A.a * B.a + A.b * B.c, A.a * B.b + A.b * B.d,
              A.c * B.a + A.d * B.c, A.c * B.b + A.d * B.d};
    constexpr double kOverflow = 1e300;
    if (std::abs(r.a) > kOverflow || std::abs(r.b) > kOverflow ||
        std::abs(r.c) > kOverflow || std::abs(r.d) > kOverflow) {
        throw OverflowError("compose: entry magnitude exceeds 1e300, renormalize the product");
    }
    return r;
}

/// Mobius action on the extended reals. Any +-inf input means the single
/// projective point at infinity; the result uses +inf for it.
inline double mobius_apply(const Matrix2& A, double z) {
    if (std::isinf(z)) {
        if (A.c != 0.0) return A.a / A.c;
        return std::numeric_limits<double>::infinity();
    }
    const double den = A.c * z + A.d;
    if (den == 0.0) return std::numeric_limits<double>::infinity();
    return (A.a * z + A.b) / den;
}

/// Mobius action on complex arguments (upper half-plane stays invariant for
/// det > 0).
inline std::complex<double> mobius_apply(const Matrix2& A, std::complex<double> z) {
    const std::complex<double> den = A.c * z + A.d;
    if (den == std::complex<double>(0.0, 0.0)) {
        return {std::numeric_limits<double>::infinity(), 0.0};
    }
    return (A.a * z + A.b) / den;
}

/// d/dz of the Mobius map of A at a real point.
inline double mobius_derivative(const Matrix2& A, double z) {
    const double den = A.c * z + A.d;
    return A.det() / (den * den);
}

} // namespace drmt
