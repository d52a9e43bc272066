#include "drmt/oracles.hpp"

#include <cmath>

#include "drmt/errors.hpp"
#include "drmt/quadrature.hpp"
#include "drmt/specfun.hpp"

namespace drmt::oracles {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

FreeCase free_case(double alpha, double lambda) {
    FreeCase out;
    const double sa = std::sin(alpha), ca = std::cos(alpha);
    if (lambda > 0.0) {
        out.n = std::sqrt(lambda) / kPi;
        out.sigma_prime = std::sqrt(lambda) / (kPi * (sa * sa + lambda * ca * ca));
        out.w = std::numeric_limits<double>::quiet_NaN(); // real-valued only below the spectrum
        return out;
    }
    const double k = std::sqrt(-lambda);
    const double den = k * ca + sa;
    if (std::abs(den) < 1e-14 * (1.0 + k)) {
        throw PoleHit("free_case: lambda = -tan(alpha)^2 is a pole of w");
    }
    out.n = 0.0;
    out.sigma_prime = 0.0;
    out.w = (ca - k * sa) / den;
    return out;
}

double kronig_penney_half_trace(double k, double ell, double v) {
    if (!(k > 0.0)) throw ValidationError("kronig_penney: requires k > 0");
    return std::cos(k * ell) + std::sin(k * ell) * v / (2.0 * k);
}

bool kronig_penney_in_band(double k, double ell, double v) {
    return std::abs(kronig_penney_half_trace(k, ell, v)) < 1.0;
}

HomogeneousString homogeneous_string(double lambda, double m, double ell) {
    if (!(m > 0.0) || !(ell > 0.0)) {
        throw ValidationError("homogeneous_string: m and ell must be positive");
    }
    HomogeneousString out;
    const double h = 1.0 - lambda * m * ell / 2.0;
    if (lambda < 0.0) {
        const double grow = h + std::sqrt(h * h - 1.0);
        out.omega = std::log(grow) / ell;
        out.w = -(1.0 - std::exp(-out.omega * ell)) / ell;
        return out;
    }
    if (!(lambda > 0.0) || !(lambda < 4.0 / (m * ell))) {
        throw ValidationError("homogeneous_string: band formulas need 0 < lambda < 4/(m ell)");
    }
    out.n = std::acos(h) / (kPi * ell);
    out.sigma_prime = std::sqrt(1.0 - h * h) / (kPi * ell);
    return out;
}

Halperin halperin(double energy, double sigma) {
    if (!(sigma > 0.0)) throw ValidationError("halperin: sigma must be positive");
    Halperin out;
    const double xi = std::cbrt(sigma / 2.0);
    const double arg = -energy / (xi * xi);
    const auto A = specfun::airy(arg);
    const double mod2 = A.ai * A.ai + A.bi * A.bi;
    out.n_airy = xi / (kPi * kPi) / mod2;
    // omega = xi (Ai' - i Bi')/(Ai - i Bi) on the E + i0 branch
    const std::complex<double> num(A.aip, -A.bip);
    const std::complex<double> den(A.ai, -A.bi);
    out.omega = xi * num / den;

    // 1/N = sqrt(2 pi / sigma) int_0^inf u^{-1/2} exp(-(2/sigma)(u^3/12 + E u)) du,
    // u = s^2 and peak normalization keep the quadrature well scaled
    auto log_integrand = [energy, sigma](double s) {
        const double u = s * s;
        return -(2.0 / sigma) * (u * u * u / 12.0 + energy * u);
    };
    double smax = 1.0, fmax = log_integrand(1.0);
    for (double s = 0.0; s < 60.0; s += 1e-3) {
        const double f = log_integrand(s);
        if (f > fmax) {
            fmax = f;
            smax = s;
        }
    }
    auto g = [&](double s) { return 2.0 * std::exp(log_integrand(s) - fmax); };
    auto q = quad::integrate_to_inf(g, 0.0, 1e-13, 1e-11);
    if (!q.converged) throw NumericalError("halperin: quadrature for the N integral did not converge");
    (void)smax;
    const double log_inv_n = 0.5 * std::log(2.0 * kPi / sigma) + fmax + std::log(q.value);
    out.n_integral = std::exp(-log_inv_n);
    return out;
}

double halperin_density(double energy, double sigma, double z) {
    const double n = halperin(energy, sigma).n_airy;
    // f(z) = (2N/sigma) int_0^inf exp(Phi(z - s) - Phi(z)) ds with
    // Phi(u) = (2/sigma)(u^3/3 + E u)
    auto expo = [energy, sigma, z](double s) {
        const double d = (-s) * (z * z + z * (z - s) + (z - s) * (z - s)) / 3.0 - energy * s;
        return std::exp((2.0 / sigma) * d);
    };
    auto q = quad::integrate_to_inf(expo, 0.0, 1e-12, 1e-9);
    if (!q.converged) throw NumericalError("halperin_density: quadrature did not converge");
    return 2.0 * n / sigma * q.value;
}

double kotani_N(double lambda, double m, double ell) {
    if (!(lambda > 0.0) || !(m > 0.0) || !(ell > 0.0)) {
        throw ValidationError("kotani_N: requires lambda > 0, m > 0, ell > 0");
    }
    const double arg = 2.0 / std::sqrt(m * lambda * ell);
    const auto jy = specfun::bessel_j1y1(arg);
    return (m * lambda / (kPi * kPi)) / (jy.j1 * jy.j1 + jy.y1 * jy.y1);
}

double kotani_N_small_lambda(double lambda, double m, double ell) {
    return std::sqrt(m / ell) * std::sqrt(lambda) / kPi;
}

double kotani_letac_mean_w(double lambda, double m, double ell) {
    if (!(lambda < 0.0)) throw ValidationError("kotani_letac_mean_w: requires lambda < 0");
    const double arg = 2.0 / std::sqrt(-m * lambda * ell);
    return std::sqrt(-m * lambda / ell) * specfun::bessel_k(0, arg) / specfun::bessel_k(1, arg);
}

double nieuwenhuizen_omega_negative(double lambda, double ell, double v) {
    if (!(lambda < 0.0)) throw ValidationError("nieuwenhuizen: requires lambda < 0");
    if (!(ell > 0.0) || !(v > 0.0)) throw ValidationError("nieuwenhuizen: ell, v must be positive");
    const double sq = std::sqrt(-lambda);
    const double kappa = -1.0 / (2.0 * ell * sq);
    const auto w = specfun::whittaker_w(kappa, 0.5, 2.0 * sq / v);
    return -2.0 * sq * w.wp / w.w;
}

double dyson_type_i_mean_w(double lambda, double p, double q) {
    if (!(lambda < 0.0)) throw ValidationError("dyson_type_i_mean_w: requires lambda < 0");
    if (!(p > 0.0) || !(q > 0.0)) throw ValidationError("dyson_type_i_mean_w: p, q must be positive");
    const double r = -lambda / q;
    const double u = specfun::kummer_u(p, 1.0, r);
    const double up = specfun::kummer_u_deriv(p, 1.0, r);
    return -lambda * up / u;
}

double dyson_type_i_sigma_asymptote(double lambda, double q) {
    if (!(lambda > 0.0) || !(q > 0.0)) {
        throw ValidationError("dyson_type_i_sigma_asymptote: requires lambda > 0, q > 0");
    }
    const double l = std::log(lambda / q);
    return q / (l * l);
}

double cohen_newman_gamma_quadrature(double alpha, double beta) {
    if (alpha == 0.0) throw ValidationError("cohen_newman: requires alpha != 0");
    // (1/2pi) int ln |M u(theta)| dtheta for the fixed triangular factor M;
    // the periodic analytic integrand makes the midpoint rule spectrally
    // accurate
    const int m = 4096;
    long double acc = 0.0L;
    for (int i = 0; i < m; ++i) {
        const double th = (i + 0.5) * 2.0 * kPi / m;
        const double c = std::cos(th), s = std::sin(th);
        const double x1 = alpha * c + beta * s;
        const double x2 = s / alpha;
        acc += 0.5L * std::log(static_cast<long double>(x1) * x1 +
                               static_cast<long double>(x2) * x2);
    }
    return static_cast<double>(acc / m);
}

double cohen_newman_gamma_closed(double alpha, double beta) {
    const double t = alpha + 1.0 / alpha;
    return 0.5 * std::log((t * t + beta * beta) / 4.0);
}

double lifshitz_tail(double energy, double sigma) {
    if (!(energy < 0.0) || !(sigma > 0.0)) {
        throw ValidationError("lifshitz_tail: requires E < 0 and sigma > 0");
    }
    return -8.0 / (3.0 * sigma) * std::pow(-energy, 1.5);
}

double gumbel_cdf(double x) { return 1.0 - std::exp(-std::exp(x)); }

double level_poisson_pmf(unsigned n, double mean) {
    if (!(mean > 0.0)) throw ValidationError("level_poisson_pmf: mean must be positive");
    double lp = -mean + n * std::log(mean);
    for (unsigned j = 2; j <= n; ++j) lp -= std::log(static_cast<double>(j));
    return std::exp(lp);
}

} // namespace drmt::oracles
