#pragma once

#include <cmath>
#include <complex>

#include "drmt/matrix2.hpp"

namespace drmt {

/// A point x + iy of the Poincare upper half-plane, y > 0.
struct HalfPlanePoint {
    double x{0}, y{1};

    HalfPlanePoint() = default;
    HalfPlanePoint(double re, double im) : x(re), y(im) {
        if (!(y > 0.0)) throw ValidationError("HalfPlanePoint: requires y > 0");
    }
    explicit HalfPlanePoint(std::complex<double> z) : HalfPlanePoint(z.real(), z.imag()) {}

    std::complex<double> as_complex() const { return {x, y}; }
};

/// Mobius image of a half-plane point; requires det A > 0 so that the
/// half-plane is preserved.
inline HalfPlanePoint mobius_apply(const Matrix2& A, const HalfPlanePoint& z) {
    const double cd = A.c * z.x + A.d;
    const double cy = A.c * z.y;
    const double den = cd * cd + cy * cy;
    const double re = ((A.a * z.x + A.b) * cd + A.a * z.y * cy) / den;
    const double im = A.det() * z.y / den;
    return HalfPlanePoint{re, im};
}

/// Hyperbolic distance: ch(rho) = ((x0-x1)^2 + y0^2 + y1^2) / (2 y0 y1),
/// with the ch >= 1 guard absorbing rounding at coincident points.
inline double hyperbolic_distance(const HalfPlanePoint& z0, const HalfPlanePoint& z1) {
    const double dx = z0.x - z1.x;
    const double ch = (dx * dx + z0.y * z0.y + z1.y * z1.y) / (2.0 * z0.y * z1.y);
    return std::acosh(std::max(1.0, ch));
}

} // namespace drmt
