#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "drmt/ensembles.hpp"
#include "drmt/stats.hpp"

namespace drmt {

/// One drawn sample of an impurity configuration on [0, L]: a leading free
/// spacing ell0, then cells (kick w_j at the left end, free spacing ell_j).
/// The last spacing is truncated so the spacings sum to the total length.
struct Realization {
    enum class Kind { String, Schroedinger };
    Kind kind = Kind::Schroedinger;
    double ell0 = 1.0;
    std::vector<Cell> cells;
    double length = 1.0;

    std::size_t impurities() const { return cells.size(); }
    /// CSV rows (ell_j, w_j) with the leading spacing as (ell0, 0).
    void write_csv(std::ostream& os) const;
};

/// Draw a realization of total length `length` from an impurity-model spec.
Realization make_realization(const EnsembleSpec& spec, double length, RandomStream& rng);

/// Boundary data: alpha parametrizes the left condition
/// sin(alpha) psi(0) - cos(alpha) psi'(0) = 0 (alpha = pi/2 is Dirichlet);
/// z_r is the right-end slope psi'(L-) = z_r psi(L), +inf meaning psi(L) = 0.
struct BoundaryData {
    double alpha = 1.5707963267948966;
    double z_r = std::numeric_limits<double>::infinity();
};

/// Renormalized state at L: (psi', psi) = exp(log_scale) * (psi_prime, psi).
struct PropagateResult {
    double psi_prime = 0.0;
    double psi = 1.0;
    double log_scale = 0.0;
    std::uint64_t nodes = 0; // zeros of psi on (0, L)
};

/// Exact piecewise propagation with initial data (psi'(0), psi(0)) =
/// (sin alpha, cos alpha). Nodes come from the nondecreasing phase on
/// oscillatory Schroedinger segments and from endpoint sign changes
/// otherwise.
PropagateResult propagate(const Realization& real, double lambda, const BoundaryData& bc);

/// nodes / L averaged over replicas.
Estimate ids_node_counting(const EnsembleSpec& spec, double lambda, double length, int replicas,
                           std::uint64_t seed, std::uint64_t stream_base = 0);

/// Re = mean ln ||state(L)|| / L, Im = -pi * (nodes/L), on the lambda + i0
/// branch.
struct ComplexLyapunovEstimate {
    std::complex<double> value;
    double re_stderr = 0.0;
    double im_stderr = 0.0;
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    std::string model;
};
ComplexLyapunovEstimate complex_lyapunov(const EnsembleSpec& spec, double lambda, double length,
                                         int replicas, std::uint64_t seed,
                                         std::uint64_t stream_base = 0);

/// Truncated Weyl coefficient by backward evaluation of the finite continued
/// fraction from z_r, then the alpha map. Throws PoleHit when a real-lambda
/// evaluation lands on an eigenvalue of the truncated problem.
std::complex<double> weyl_cf_truncated(const Realization& real, std::complex<double> lambda,
                                       const BoundaryData& bc);

/// (1/pi) Im w on a grid; measure differences by trapezoid.
std::vector<double> stieltjes_density(const std::vector<std::complex<double>>& w_values);

/// Mean spectral density over realizations at lambda + i eps, with an
/// eps-halving stability probe.
struct MeanDensityResult {
    std::vector<double> density;
    bool eps_warning = false; // halving eps moved some point by > 5%
};
MeanDensityResult mean_spectral_density(const EnsembleSpec& spec, const std::vector<double>& grid,
                                        double eps, double length, int replicas,
                                        std::uint64_t seed, const BoundaryData& bc);

} // namespace drmt
