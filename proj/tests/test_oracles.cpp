#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "drmt/ensembles.hpp"
#include "drmt/oracles.hpp"
#include "drmt/quadrature.hpp"
#include "drmt/specfun.hpp"

using namespace drmt;
namespace orc = drmt::oracles;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("free case values") {
    CHECK(orc::free_case(kPi / 2.0, 4.0).n == doctest::Approx(2.0 / kPi).epsilon(1e-14));
    CHECK(orc::free_case(kPi / 2.0, -1.0).w == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(orc::free_case(0.0, 1.0).sigma_prime == doctest::Approx(1.0 / kPi).epsilon(1e-12));
    // simple pole at lambda = -tan^2(alpha)
    const double alpha = 2.0; // tan(2) < 0, pole at -tan(2)^2
    CHECK_THROWS_AS(orc::free_case(alpha, -std::tan(alpha) * std::tan(alpha)), PoleHit);
}

TEST_CASE("band condition") {
    CHECK(orc::kronig_penney_in_band(2.0, 1.0, 0.0));
    CHECK(!orc::kronig_penney_in_band(0.1, 1.0, 1.0));
    CHECK(orc::kronig_penney_half_trace(0.1, 1.0, 1.0) == doctest::Approx(1.494).epsilon(1e-3));
    // at a band edge the half-trace is +-1, i.e. |Tr A| = 2
    double lo = 3.0, hi = 3.3; // bracket a sign change of |h|-1
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (std::abs(orc::kronig_penney_half_trace(mid, 1.0, 1.0)) > 1.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    CHECK(std::abs(orc::kronig_penney_half_trace(lo, 1.0, 1.0)) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("homogeneous string") {
    const auto mid = orc::homogeneous_string(2.0, 1.0, 1.0);
    CHECK(mid.n == doctest::Approx(0.5).epsilon(1e-13)); // arccos(0)/(pi) = 1/2 per unit ell

    const auto neg = orc::homogeneous_string(-1.0, 1.0, 1.0);
    CHECK(neg.omega == doctest::Approx(std::log((3.0 + std::sqrt(5.0)) / 2.0)).epsilon(1e-13));
    CHECK(neg.w == doctest::Approx(-(1.0 - std::exp(-neg.omega))).epsilon(1e-13));

    // small-lambda density approaches the type-II square-root form
    const double lam = 1e-5;
    const auto tiny = orc::homogeneous_string(lam, 1.0, 1.0);
    CHECK(tiny.sigma_prime / orc::kotani_N_small_lambda(lam, 1.0, 1.0) ==
          doctest::Approx(1.0).epsilon(1e-2));

    CHECK_THROWS_AS(orc::homogeneous_string(5.0, 1.0, 1.0), ValidationError);
}

TEST_CASE("white-noise N from the airy ratio matches the integral form") {
    for (double sigma : {0.5, 2.0, 8.0}) {
        for (double e = -10.0; e <= 10.0; e += 2.5) {
            const auto h = orc::halperin(e, sigma);
            CHECK(h.n_airy == doctest::Approx(h.n_integral).epsilon(1e-8));
        }
    }
    // E = 0, sigma = 2 reduces to the Ai(0), Bi(0) combination
    const auto a0 = specfun::airy(0.0);
    const auto h0 = orc::halperin(0.0, 2.0);
    CHECK(h0.n_airy ==
          doctest::Approx(1.0 / (kPi * kPi * (a0.ai * a0.ai + a0.bi * a0.bi))).epsilon(1e-13));
    // Im Omega = -pi N on the branch
    CHECK(h0.omega.imag() == doctest::Approx(-kPi * h0.n_airy).epsilon(1e-12));
}

TEST_CASE("white-noise stationary density has the rice tail") {
    const double sigma = 2.0, e = 1.0;
    const double n = orc::halperin(e, sigma).n_airy;
    for (double z : {50.0, -50.0}) {
        CHECK(z * z * orc::halperin_density(e, sigma, z) == doctest::Approx(n).epsilon(0.01));
    }
    // and integrates to one
    auto f = [](double z) { return orc::halperin_density(1.0, 2.0, z); };
    const auto q = quad::integrate(f, -60.0, 60.0, 1e-9, 1e-7);
    CHECK(q.value == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("type-ii string N") {
    const double n1 = orc::kotani_N(1.0, 1.0, 1.0);
    const auto jy = specfun::bessel_j1y1(2.0);
    CHECK(n1 == doctest::Approx((1.0 / (kPi * kPi)) / (jy.j1 * jy.j1 + jy.y1 * jy.y1))
                    .epsilon(1e-13));

    // square-root asymptote at small lambda
    CHECK(orc::kotani_N(1e-4, 1.0, 1.0) / orc::kotani_N_small_lambda(1e-4, 1.0, 1.0) ==
          doctest::Approx(1.0).epsilon(0.02));

    // positive and increasing on (0, 10]
    double prev = 0.0;
    for (double lam = 0.25; lam <= 10.0; lam += 0.25) {
        const double v = orc::kotani_N(lam, 1.0, 1.0);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("type-ii mean weyl coefficient") {
    const double v = orc::kotani_letac_mean_w(-1.0, 1.0, 1.0);
    CHECK(v == doctest::Approx(specfun::bessel_k(0, 2.0) / specfun::bessel_k(1, 2.0))
                   .epsilon(1e-12));
    // the continuum limit (m = ell -> 0 at unit density) approaches the free rate
    CHECK(orc::kotani_letac_mean_w(-1.0, 0.01, 0.01) == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("whittaker growth rate for exponential couplings") {
    // v -> 0 recovers the free decay rate sqrt(-lambda)
    CHECK(orc::nieuwenhuizen_omega_negative(-1.0, 1.0, 1e-5) == doctest::Approx(1.0).epsilon(1e-3));
    // repulsive impurities raise the rate above the free one
    for (double lam = -4.0; lam <= -0.25; lam += 0.25) {
        CHECK(orc::nieuwenhuizen_omega_negative(lam, 1.0, 1.0) > std::sqrt(-lam));
    }
}

TEST_CASE("type-i mean weyl coefficient matches the kummer mean") {
    const double lam = -1.0, p = 1.0, q = 1.0;
    const double mw = orc::dyson_type_i_mean_w(lam, p, q);
    // E[w]/lambda equals the mean of the Kummer(p, 0, -lambda/q) law
    auto f = [p, lam, q](double y) {
        return y * density_kummer(p, 0.0, -lam / q, y);
    };
    const auto mean = quad::integrate_to_inf(f, 0.0, 1e-11, 1e-9);
    CHECK(mw / lam == doctest::Approx(mean.value).epsilon(1e-6));
    CHECK(mw < 0.0);
}

TEST_CASE("angular-average growth rate quadrature") {
    CHECK(orc::cohen_newman_gamma_quadrature(1.0, 0.0) == doctest::Approx(0.0).epsilon(1e-12));
    for (double alpha : {2.0, 0.5, 3.0}) {
        for (double beta : {0.0, 1.0, -2.0}) {
            CHECK(orc::cohen_newman_gamma_quadrature(alpha, beta) ==
                  doctest::Approx(orc::cohen_newman_gamma_closed(alpha, beta)).epsilon(1e-10));
        }
    }
}

TEST_CASE("deep-tail exponent and extreme-value forms") {
    CHECK(orc::lifshitz_tail(-4.0, 1.0) == doctest::Approx(-64.0 / 3.0).epsilon(1e-14));
    CHECK(orc::gumbel_cdf(0.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
    double total = 0.0;
    for (unsigned n = 0; n < 60; ++n) total += orc::level_poisson_pmf(n, 3.0);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("deep-tail exponent matches the closed N") {
    // at E sigma^{-2/3} = -8 the saddle exponent carries ln N to 10%
    const double sigma = 1.0, e = -8.0;
    const double lnn = std::log(orc::halperin(e, sigma).n_airy);
    CHECK(lnn / orc::lifshitz_tail(e, sigma) == doctest::Approx(1.0).epsilon(0.10));
}

TEST_CASE("oracles stay finite on their domains") {
    for (int i = 0; i <= 1000; ++i) {
        const double e = -10.0 + 20.0 * i / 1000.0;
        CHECK(std::isfinite(orc::halperin(e, 2.0).n_airy));
        if (e > 0.01) {
            CHECK(std::isfinite(orc::kotani_N(e, 1.0, 1.0)));
            CHECK(std::isfinite(orc::free_case(kPi / 2.0, e).n));
        }
        if (e < -0.01) {
            CHECK(std::isfinite(orc::nieuwenhuizen_omega_negative(e, 1.0, 1.0)));
            CHECK(std::isfinite(orc::dyson_type_i_mean_w(e, 1.0, 1.0)));
            CHECK(std::isfinite(orc::kotani_letac_mean_w(e, 1.0, 1.0)));
        }
    }
}
