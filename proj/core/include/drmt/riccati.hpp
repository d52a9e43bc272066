#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "drmt/ensembles.hpp"
#include "drmt/histogram.hpp"
#include "drmt/projective.hpp"
#include "drmt/stats.hpp"

namespace drmt {

struct RiccatiOrbitConfig {
    std::uint64_t burnin_cells = 1000;
    std::uint64_t sample_cells = 100000;
    double z_max = 100.0;       // histogram half-range and blow-up threshold
    double initial_z = 0.0;     // may be +inf
    double sample_dx = 0.25;    // spacing of the uniform-in-x sampling grid
};

/// Forward Riccati orbit z = psi'/psi of an impurity model, iterated by the
/// exact per-cell Mobius maps. Passages of z through infinity (zeros of psi)
/// are counted as crossings; infinity itself is an ordinary state.
class RiccatiForwardOrbit {
public:
    RiccatiForwardOrbit(const EnsembleSpec& spec, double initial_z, RandomStream rng);

    struct Event {
        double z_before_kick = 0.0;
        std::uint64_t crossings = 0; // cumulative
        double x = 0.0;              // position of the impurity
    };
    /// Advance one cell (kick, then free spacing).
    Event step();

    /// Walk `n_grid` samples spaced dx apart, visiting z at each grid point.
    template <class Visitor>
    void sample_uniform(std::uint64_t n_grid, double dx, Visitor&& visit);

    double current_z() const { return u_.slope(); }
    std::uint64_t crossings() const { return crossings_; }
    double position() const { return x_; }
    /// Mean of z over traversed length, accumulated in closed form per
    /// segment (equals (1/L) ln |psi(L)/psi(0)|).
    double ergodic_log_mean() const;

private:
    void advance_segment(double ell);
    void advance_partial(double t); // move within the current segment
    void kick(double w);

    EnsembleSpec spec_;
    MatrixSampler sampler_;
    bool is_string_;
    double lambda_;
    ProjectivePoint u_;
    std::uint64_t crossings_ = 0;
    double x_ = 0.0;
    double log_psi_sum_ = 0.0, log_psi_comp_ = 0.0;
    double seg_remaining_ = 0.0; // unconsumed part of the current free spacing
};

/// One sample of the infinite-sample Weyl coefficient w(lambda) (the
/// chi'(0)/chi(0) limit, alpha = pi/2 convention), drawn by backward
/// composition of inverse cell maps until two starts agree to `tol`.
/// Throws NonConvergence past `cap` cells.
double backward_limit(const EnsembleSpec& spec, RandomStream& rng, double tol = 1e-12,
                      std::uint64_t cap = 100000);

/// Uniform-in-x histogram of the forward orbit after burn-in.
struct StationaryHistogram {
    HistogramDensity hist;
    bool tail_warning = false; // tail mass above 5%
};
StationaryHistogram stationary_histogram(const EnsembleSpec& spec, const RiccatiOrbitConfig& cfg,
                                         std::size_t bins, RandomStream rng);

/// L1 distance between the binned density and its one-cell push-forward
/// under fresh matrix draws.
double dyson_schmidt_residual(const HistogramDensity& hist, const EnsembleSpec& spec,
                              RandomStream& rng, int n_draws = 4096);

/// Tail coefficient lim z^2 f(z) fitted as the median of z^2 f over the
/// outer decade of bins. Throws TailUnresolved when the fit spread exceeds
/// 20%.
double rice_ids(const HistogramDensity& hist);

/// Principal-value mean of z over a symmetric histogram; the +-tails cancel
/// pairwise by construction.
double pv_gamma(const HistogramDensity& hist);

/// Letac fixed-point chain z -> 1/(G1 + 1/(G2 + z)) with G1 ~ Gamma(p, 2/b),
/// G2 ~ Gamma(p, 2/a); independent short chains give near-iid samples of the
/// stationary law.
std::vector<double> letac_fixed_point_samples(double p, double a, double b, std::size_t n,
                                              std::uint64_t seed, std::uint64_t burnin = 64);

struct SdeConfig {
    double z_max = 100.0;
    std::size_t hist_bins = 400;
    double gamma_clip = 100.0;
    std::uint64_t hist_stride = 1; // histogram every k-th step
};

struct SdeResult {
    double n_estimate = 0.0;      // crossings per unit length
    double gamma_estimate = 0.0;  // clipped principal-value time average of Z
    std::uint64_t crossings = 0;
    double length = 0.0;
    HistogramDensity hist;
};

/// Euler-Maruyama integration of Z' = -Z^2 - E + sqrt(sigma) * white noise
/// with reinjection at -z_max -> +z_max. The deterministic tail flight time
/// beyond |z| = z_max is added to the clock at each reinjection, making the
/// truncation bias second order (quantified by the z_max doubling check).
/// Throws StepTooLarge when over 0.1% of steps move |Z| by more than
/// z_max / 2.
SdeResult sde_white_noise_run(double energy, double sigma, double length, double dt,
                              const SdeConfig& cfg, RandomStream rng);

struct FirstPassageStats {
    std::vector<double> tau;      // sorted first-passage times
    double mean = 0.0;
    double stderr_ = 0.0;
    std::vector<std::uint64_t> window_counts; // crossings per window of window_len
    double window_len = 0.0;
};

/// First-passage times of the white-noise Riccati flow from +infinity to
/// -infinity (one per sample, independent streams), integrated with an
/// adaptive-step Euler-Maruyama scheme and analytic tail flights. Window
/// counts are read off the concatenated renewal sequence.
FirstPassageStats first_passage_stats(double energy, double sigma, std::size_t n_samples,
                                      double window_len, std::uint64_t seed, double z_max = 100.0,
                                      double dt_scale = 0.01);

// --- template implementation ---

template <class Visitor>
void RiccatiForwardOrbit::sample_uniform(std::uint64_t n_grid, double dx, Visitor&& visit) {
    for (std::uint64_t i = 0; i < n_grid; ++i) {
        double need = dx;
        while (need > 0.0) {
            if (seg_remaining_ <= 0.0) {
                const Cell c = sampler_.next_cell();
                kick(c.w);
                seg_remaining_ = c.ell;
            }
            const double t = std::min(need, seg_remaining_);
            advance_partial(t);
            need -= t;
        }
        visit(u_.slope());
    }
}

} // namespace drmt
