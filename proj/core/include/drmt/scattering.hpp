#pragma once

#include <complex>
#include <vector>

#include "drmt/ensembles.hpp"
#include "drmt/histogram.hpp"
#include "drmt/spectral.hpp"
#include "drmt/stats.hpp"

namespace drmt {

/// Reflexion/transmission data of one finite sample at E = k^2 = 1 (the k=1
/// normalization; other k rescale lengths and couplings at the interface).
struct ScatterResult {
    std::complex<double> r;
    std::complex<double> t;
    double length = 0.0;
    double k = 1.0;
};

/// R from the half-plane backward orbit at i, |T| from the Frobenius-norm
/// formula |T|^2 = 4 / (2 + |Pi_n|^2), T phase from wave matching.
ScatterResult rt_coefficients(const Realization& real, double k = 1.0);

/// |T|^2 = 4/(2 + |Pi|_F^2) for a bare product matrix.
double transmission_sq_from_product(const Matrix2& pi);

/// Both coefficients by direct wave matching of the transfer matrix (small
/// samples; used as an independent oracle for the formula path).
ScatterResult rt_wave_matching(const Realization& real);

struct DecayFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
    std::vector<double> lengths;
    std::vector<double> mean_log_t;
};

/// Linear fit of E[ln |T_L|] against L; slope approaches -gamma(k^2).
/// Throws FitUnstable when r^2 < 0.99.
DecayFit decay_rate(const EnsembleSpec& spec, const std::vector<double>& lengths, int replicas,
                    std::uint64_t seed);

/// One sample of the limiting reflexion phase Theta = arg R of a half-infinite
/// sample, from the convergent backward iterates at i. Throws NonConvergence
/// when the iterates fail to settle on a real point.
double reflexion_phase_sample(const EnsembleSpec& spec, RandomStream& rng, double tol = 1e-10,
                              std::uint64_t cap = 100000);

struct PhaseHistogram {
    HistogramDensity hist; // over [-pi, pi)
    bool degenerate = false; // R = 0 identically (free case), phase undefined
};
PhaseHistogram reflexion_phase_histogram(const EnsembleSpec& spec, std::size_t samples,
                                         std::uint64_t seed, std::size_t bins = 64);

/// Phase density predicted from a stationary Riccati histogram f: the mass of
/// the theta-bin equals the f-mass of the mapped z-interval (z = -tan(theta/2),
/// the half-infinite-sample limit having -X_inf distributed like f).
std::vector<double> phase_density_from_f(const HistogramDensity& f_hist,
                                         const std::vector<double>& theta_edges);

} // namespace drmt
