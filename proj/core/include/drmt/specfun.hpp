#pragma once

namespace drmt::specfun {

/// Airy functions and derivatives. Power series for |x| <= 8 with extended
/// internal precision, asymptotic expansions beyond. Accuracy target 1e-10
/// relative on [-50, 10]; Bi grows like exp((2/3)x^{3/2}) for x > 10 and is
/// returned as long as it is representable.
struct AiryResult {
    double ai, bi, aip, bip;
    double abs_err_bound;
};
AiryResult airy(double x);

/// Cylinder functions of order one, x > 0. Series below x = 12, integral
/// representations above.
struct J1Y1Result {
    double j1, y1;
    double abs_err_bound;
};
J1Y1Result bessel_j1y1(double x);

/// Modified Bessel K_n for n in {0, 1}, x > 0.
double bessel_k(int n, double x);

/// log Gamma on (0, inf), relative error <= 1e-12.
double ln_gamma(double x);
double gamma_fn(double x);

/// Confluent hypergeometric U (Kummer Psi) for a > 0, x > 0, evaluated from
/// the Laplace-type integral representation by adaptive quadrature.
double kummer_u(double a, double b, double x);
/// dU/dx = -a U(a+1, b+1, x).
double kummer_u_deriv(double a, double b, double x);

/// Whittaker W and its derivative via the U reduction; requires
/// mu - kappa + 1/2 > 0.
struct WhittakerResult {
    double w, wp;
};
WhittakerResult whittaker_w(double kappa, double mu, double x);

/// Exponential integral E1 by series/continued fraction (independent helper
/// used as a cross-check target).
double expint_e1(double x);

} // namespace drmt::specfun
