#pragma once

#include <complex>

namespace drmt::oracles {

/// Free Schroedinger line, boundary parameter alpha at the origin.
/// N and sigma' are the lambda > 0 expressions; w is the real lambda < 0
/// limit value. Throws PoleHit at the simple pole lambda = -tan^2(alpha).
struct FreeCase {
    double n = 0.0;           // integrated density of states, lambda > 0
    double w = 0.0;           // Weyl coefficient, lambda < 0
    double sigma_prime = 0.0; // spectral density, lambda > 0
};
FreeCase free_case(double alpha, double lambda);

/// Band condition |cos(k ell) + sin(k ell) v / (2k)| < 1.
bool kronig_penney_in_band(double k, double ell, double v);
/// Half-trace cos(k ell) + sin(k ell) v/(2k) of the cell matrix.
double kronig_penney_half_trace(double k, double ell, double v);

/// Homogeneous point-mass string: growth rate for lambda < 0, band formulas
/// for 0 < lambda < 4/(m ell).
struct HomogeneousString {
    double omega = 0.0;
    double n = 0.0;
    double sigma_prime = 0.0;
    double w = 0.0;
};
HomogeneousString homogeneous_string(double lambda, double m, double ell);

/// White-noise closed forms: Airy-ratio complex growth rate, the two
/// equivalent expressions for N, and the stationary Riccati density.
struct Halperin {
    double n_airy = 0.0;
    double n_integral = 0.0;
    std::complex<double> omega;
};
Halperin halperin(double energy, double sigma);
double halperin_density(double energy, double sigma, double z);

/// Type-II exponential string: N(lambda) for lambda > 0 via J1, Y1.
double kotani_N(double lambda, double m, double ell);
/// Small-lambda square-root asymptote of the same.
double kotani_N_small_lambda(double lambda, double m, double ell);
/// Mean -w(lambda), lambda < 0, via the K0/K1 ratio.
double kotani_letac_mean_w(double lambda, double m, double ell);

/// Exponential-coupling impurities, lambda < 0: growth rate from the
/// Whittaker logarithmic derivative.
double nieuwenhuizen_omega_negative(double lambda, double ell, double v);

/// Type-I string with Gamma(p, q) ratio data: mean Weyl coefficient at
/// lambda < 0, and the log-squared small-lambda density asymptote.
double dyson_type_i_mean_w(double lambda, double p, double q);
double dyson_type_i_sigma_asymptote(double lambda, double q);

/// Rotation-invariant ensemble: growth rate by quadrature of the angular
/// average (direction independence makes any fixed direction family valid).
double cohen_newman_gamma_quadrature(double alpha, double beta);
/// Closed form of the same quadrature.
double cohen_newman_gamma_closed(double alpha, double beta);

/// Deep-tail exponent of ln N(E) for the white-noise potential.
double lifshitz_tail(double energy, double sigma);
double gumbel_cdf(double x);
double level_poisson_pmf(unsigned n, double mean);

} // namespace drmt::oracles
