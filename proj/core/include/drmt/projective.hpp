#pragma once

#include <cmath>
#include <limits>

#include "drmt/matrix2.hpp"

namespace drmt {

/// A direction in R^2, stored as a unit vector up to sign. The canonical
/// representative has its first nonzero component positive. The slope view
/// z = u1/u2 covers R union {inf}; infinity is u = (1, 0).
struct ProjectivePoint {
    double u1{1}, u2{0};

    static ProjectivePoint from_vec(double x, double y) {
        const double h = std::hypot(x, y);
        ProjectivePoint p{x / h, y / h};
        p.canonicalize();
        return p;
    }

    static ProjectivePoint from_slope(double z) {
        if (std::isinf(z)) return {1.0, 0.0};
        return from_vec(z, 1.0);
    }

    static ProjectivePoint infinity_point() { return {1.0, 0.0}; }

    double slope() const {
        if (u2 == 0.0) return std::numeric_limits<double>::infinity();
        return u1 / u2;
    }

    bool is_infinite() const { return u2 == 0.0; }

    void canonicalize() {
        if (u1 < 0.0 || (u1 == 0.0 && u2 < 0.0)) {
            u1 = -u1;
            u2 = -u2;
        }
        if (u1 == 0.0) u1 = 0.0; // normalize -0.0
        if (u2 == 0.0) u2 = 0.0;
    }
};

/// Projective action of an invertible matrix: apply and renormalize.
inline ProjectivePoint apply(const Matrix2& A, const ProjectivePoint& p) {
    return ProjectivePoint::from_vec(A.a * p.u1 + A.b * p.u2, A.c * p.u1 + A.d * p.u2);
}

/// Angle between the two lines, in [0, pi/2]; the cross/dot form keeps full
/// resolution near zero where acos of the dot product saturates.
inline double angular_distance(const ProjectivePoint& p, const ProjectivePoint& q) {
    const double dot = std::abs(p.u1 * q.u1 + p.u2 * q.u2);
    const double cross = std::abs(p.u1 * q.u2 - p.u2 * q.u1);
    return std::atan2(cross, dot);
}

} // namespace drmt
