#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "drmt/halfplane.hpp"
#include "drmt/matrix2.hpp"
#include "drmt/projective.hpp"
#include "drmt/rng.hpp"

using namespace drmt;

namespace {

Matrix2 random_sl2(RandomStream& rng) {
    // random entries with d pinned by the determinant
    double a = 0.0;
    while (std::abs(a) < 0.05) a = rng.uniform(-2.0, 2.0);
    const double b = rng.uniform(-2.0, 2.0);
    const double c = rng.uniform(-2.0, 2.0);
    return {a, b, c, (1.0 + b * c) / a};
}

HalfPlanePoint random_h(RandomStream& rng) {
    return {rng.uniform(-3.0, 3.0), rng.uniform(0.05, 4.0)};
}

} // namespace

TEST_CASE("compose basics") {
    const Matrix2 a{1, 1, 1, 0};
    CHECK(compose(Matrix2::identity(), a) == a);
    CHECK(compose(a, Matrix2::identity()) == a);

    const Matrix2 sq = compose(a, a);
    CHECK(sq.a == 2.0);
    CHECK(sq.b == 1.0);
    CHECK(sq.c == 1.0);
    CHECK(sq.d == 1.0);

    RandomStream rng(7, 0);
    for (int i = 0; i < 200; ++i) {
        Matrix2 x{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
        Matrix2 y{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
        CHECK(compose(x, y).det() == doctest::Approx(x.det() * y.det()).epsilon(1e-12));
    }

    CHECK_THROWS_AS(compose(Matrix2{1e301, 0, 0, 1e301}, Matrix2{1e10, 0, 0, 1e10}),
                    OverflowError);
}

TEST_CASE("mobius action values") {
    CHECK(mobius_apply(Matrix2{1, 2, 0, 1}, 3.0) == 5.0);           // shear adds b
    CHECK(mobius_apply(Matrix2::identity(), 0.7) == 0.7);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(mobius_apply(Matrix2{1, 0, 2, 1}, inf) == 0.5);           // a/c at infinity
    CHECK(std::isinf(mobius_apply(Matrix2{1, 1, 0, 1}, inf)));
    CHECK(std::isinf(mobius_apply(Matrix2{0, -1, 1, 0}, 0.0)));     // pole maps to infinity
}

TEST_CASE("mobius is a group action") {
    RandomStream rng(11, 0);
    for (int i = 0; i < 2000; ++i) {
        const Matrix2 a = random_sl2(rng);
        const Matrix2 b = random_sl2(rng);
        const double z = rng.uniform(-10.0, 10.0);
        const double lhs = mobius_apply(compose(a, b), z);
        const double rhs = mobius_apply(a, mobius_apply(b, z));
        if (std::isinf(lhs) || std::isinf(rhs)) {
            CHECK(std::isinf(lhs) == std::isinf(rhs));
        } else {
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
        }
    }
}

TEST_CASE("hyperbolic distance") {
    const HalfPlanePoint i{0, 1}, two_i{0, 2};
    CHECK(hyperbolic_distance(i, i) == 0.0);
    CHECK(hyperbolic_distance(i, two_i) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    // shear [[1,1],[0,1]] is an isometry moving (i, 2i) to (1+i, 1+2i)
    CHECK(hyperbolic_distance({1, 1}, {1, 2}) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("frobenius identities") {
    CHECK(Matrix2::identity().frobenius_sq() == 2.0);
    CHECK(Matrix2{2, 0, 0, 0.5}.frobenius_sq() == 4.25);

    RandomStream rng(13, 0);
    const HalfPlanePoint i{0, 1};
    for (int t = 0; t < 10000; ++t) {
        const Matrix2 a = random_sl2(rng);
        const double lhs = 2.0 * std::cosh(hyperbolic_distance(i, mobius_apply(a, i)));
        CHECK(lhs == doctest::Approx(a.frobenius_sq()).epsilon(1e-10));
    }
}

TEST_CASE("mobius maps are hyperbolic isometries") {
    RandomStream rng(17, 0);
    for (int t = 0; t < 10000; ++t) {
        const Matrix2 a = random_sl2(rng);
        const HalfPlanePoint z0 = random_h(rng), z1 = random_h(rng);
        const double before = hyperbolic_distance(z0, z1);
        const double after = hyperbolic_distance(mobius_apply(a, z0), mobius_apply(a, z1));
        CHECK(after == doctest::Approx(before).epsilon(1e-10));
    }
}

TEST_CASE("tanh half-distance to i") {
    RandomStream rng(19, 0);
    for (int t = 0; t < 2000; ++t) {
        const HalfPlanePoint z = random_h(rng);
        const double lhs = std::tanh(0.5 * hyperbolic_distance(z, {0, 1}));
        const double num = std::hypot(z.x, z.y - 1.0);
        const double den = std::hypot(z.x, z.y + 1.0);
        CHECK(lhs == doctest::Approx(num / den).epsilon(1e-12));
    }
}

TEST_CASE("half-plane stays closed under det>0 mobius") {
    RandomStream rng(23, 0);
    for (int t = 0; t < 5000; ++t) {
        const Matrix2 a = random_sl2(rng);
        const HalfPlanePoint z = random_h(rng);
        CHECK(mobius_apply(a, z).y > 0.0);
    }
}

TEST_CASE("projective round-trip on slopes") {
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(ProjectivePoint::from_slope(inf).slope() == inf);
    CHECK(ProjectivePoint::from_slope(-inf).slope() == inf); // single point at infinity
    for (double z : {0.0, 1.0, -1.0, 3.25, -17.0, 1e-12, 1e12, -1e300, 4.0e300}) {
        const double back = ProjectivePoint::from_slope(z).slope();
        CHECK(back == doctest::Approx(z).epsilon(1e-13));
    }
    // canonical sign: first nonzero component positive
    const ProjectivePoint p = ProjectivePoint::from_vec(-1.0, -2.0);
    CHECK(p.u1 > 0.0);
}

TEST_CASE("projective action matches mobius slope map") {
    RandomStream rng(29, 0);
    for (int t = 0; t < 3000; ++t) {
        const Matrix2 a = random_sl2(rng);
        const double z = rng.uniform(-5.0, 5.0);
        const ProjectivePoint img = apply(a, ProjectivePoint::from_slope(z));
        const double direct = mobius_apply(a, z);
        if (std::isinf(direct) || std::abs(direct) > 1e13) {
            CHECK(std::abs(img.slope()) > 1e10);
        } else {
            CHECK(img.slope() == doctest::Approx(direct).epsilon(1e-9));
        }
    }
}

TEST_CASE("determinant drift over a long renormalized product") {
    // elliptic (rotation) factors keep the product bounded; the renormalizer
    // projects back onto the unit-determinant sheet whenever the scaled
    // product is still safely away from rank deficiency
    RandomStream rng(31, 0);
    Matrix2 p = Matrix2::identity();
    double log_scale = 0.0;
    for (int j = 0; j < 1000000; ++j) {
        const double th = rng.uniform(0.0, 6.283185307179586);
        const Matrix2 rot{std::cos(th), -std::sin(th), std::sin(th), std::cos(th)};
        p = compose(rot, p);
        if (j % 16 == 15) {
            double s = p.frobenius() / std::sqrt(2.0);
            const double d = p.det() / (s * s);
            if (d > 0.25 && d < 4.0) s *= std::sqrt(d);
            p = p.scaled(1.0 / s);
            log_scale += std::log(s);
        }
    }
    CHECK(std::abs(p.det() * std::exp(2.0 * log_scale) - 1.0) <= 1e-12);
}
