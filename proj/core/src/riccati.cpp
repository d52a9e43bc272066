#include "drmt/riccati.hpp"

#include <algorithm>
#include <cmath>

#include "drmt/compensated.hpp"
#include "drmt/parallel.hpp"

namespace drmt {

namespace {
constexpr double kPi = 3.14159265358979323846;

inline int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }
} // namespace

RiccatiForwardOrbit::RiccatiForwardOrbit(const EnsembleSpec& spec, double initial_z,
                                         RandomStream rng)
    : spec_(spec), sampler_(spec, rng) {
    if (!is_impurity_model(spec)) {
        throw ValidationError("RiccatiForwardOrbit: spec is not an impurity model");
    }
    is_string_ = std::holds_alternative<DysonStringSpec>(spec) ||
                 std::holds_alternative<DysonTypeISpec>(spec);
    lambda_ = spectral_parameter(spec);
    u_ = ProjectivePoint::from_slope(initial_z);
    seg_remaining_ = sampler_.initial_spacing();
}

void RiccatiForwardOrbit::kick(double w) {
    // psi' jump: +w psi (coupling) or -lambda w psi (mass)
    const double j = is_string_ ? -lambda_ * w : w;
    u_ = ProjectivePoint::from_vec(u_.u1 + j * u_.u2, u_.u2);
}

void RiccatiForwardOrbit::advance_partial(double t) {
    if (t <= 0.0) return;
    // log |psi| increment in closed form: ln |psi_end| - ln |psi_start| for
    // the unnormalized segment flow applied to the unit state
    double n1, n2;
    std::uint64_t crossed = 0;
    if (is_string_) {
        // psi linear: crossing iff t u1 + u2 changes sign against u2
        n1 = u_.u1;
        n2 = u_.u2 + t * u_.u1;
        if (sign_of(n2) * sign_of(u_.u2) < 0) crossed = 1;
    } else if (lambda_ > 0.0) {
        const double k = std::sqrt(lambda_);
        double theta = std::atan2(k * u_.u2, u_.u1);
        if (theta < 0.0) theta += kPi;
        crossed = static_cast<std::uint64_t>(std::floor((theta + k * t) / kPi));
        const double c = std::cos(k * t), s = std::sin(k * t);
        n1 = c * u_.u1 - k * s * u_.u2;
        n2 = s / k * u_.u1 + c * u_.u2;
    } else if (lambda_ < 0.0) {
        const double k = std::sqrt(-lambda_);
        const double th = std::tanh(k * t);
        if (sign_of(th * u_.u1 + k * u_.u2) * sign_of(u_.u2) < 0) crossed = 1;
        const double c = std::cosh(k * t), s = std::sinh(k * t);
        n1 = c * u_.u1 + k * s * u_.u2;
        n2 = s / k * u_.u1 + c * u_.u2;
    } else {
        n1 = u_.u1;
        n2 = u_.u2 + t * u_.u1;
        if (sign_of(n2) * sign_of(u_.u2) < 0) crossed = 1;
    }
    crossings_ += crossed;
    // ln |psi| increment: |n2| / |u2| on the raw (pre-normalization) vector;
    // when psi passes zero the magnitude ratio is still the right increment
    if (u_.u2 != 0.0 && n2 != 0.0) {
        const double inc = std::log(std::abs(n2) / std::abs(u_.u2));
        const double t2 = log_psi_sum_ + inc;
        if (std::abs(log_psi_sum_) >= std::abs(inc)) {
            log_psi_comp_ += (log_psi_sum_ - t2) + inc;
        } else {
            log_psi_comp_ += (inc - t2) + log_psi_sum_;
        }
        log_psi_sum_ = t2;
    }
    u_ = ProjectivePoint::from_vec(n1, n2);
    x_ += t;
    seg_remaining_ -= t;
}

void RiccatiForwardOrbit::advance_segment(double ell) {
    seg_remaining_ = ell;
    advance_partial(ell);
}

RiccatiForwardOrbit::Event RiccatiForwardOrbit::step() {
    // finish the current spacing, reaching the next impurity
    if (seg_remaining_ > 0.0) advance_partial(seg_remaining_);
    Event ev;
    ev.z_before_kick = u_.slope();
    ev.x = x_;
    ev.crossings = crossings_;
    const Cell c = sampler_.next_cell();
    kick(c.w);
    seg_remaining_ = c.ell;
    return ev;
}

double RiccatiForwardOrbit::ergodic_log_mean() const {
    if (x_ <= 0.0) return 0.0;
    return (log_psi_sum_ + log_psi_comp_) / x_;
}

double backward_limit(const EnsembleSpec& spec, RandomStream& rng, double tol,
                      std::uint64_t cap) {
    if (!is_impurity_model(spec)) {
        throw ValidationError("backward_limit: spec is not an impurity model");
    }
    const bool is_string = std::holds_alternative<DysonStringSpec>(spec) ||
                           std::holds_alternative<DysonTypeISpec>(spec);
    const double lambda = spectral_parameter(spec);
    MatrixSampler sampler(spec, rng);

    // M accumulates A_0^{-1} A_1^{-1} ... A_n^{-1}; its Mobius image of any
    // two starts collapses to the limit point.
    const double ell0 = sampler.initial_spacing();
    Matrix2 M = is_string ? dyson_free_matrix(ell0).inverse_unimodular()
                          : schroedinger_free_matrix(lambda, ell0).inverse_unimodular();
    double w_prev = std::numeric_limits<double>::quiet_NaN();
    for (std::uint64_t j = 0; j < cap; ++j) {
        const Cell c = sampler.next_cell();
        const Matrix2 A = is_string ? dyson_cell_matrix(lambda, c.ell, c.w)
                                    : schroedinger_cell_matrix(lambda, c.ell, c.w);
        M = compose(M, A.inverse_unimodular());
        const double sc = M.frobenius();
        if (!(sc > 0.0) || !std::isfinite(sc)) throw NonConvergence("backward_limit: degenerate product");
        M = M.scaled(1.0 / sc);
        // dual starts: z = 0 maps to b/d, z = inf maps to a/c
        const double w0 = M.b / M.d;
        const double winf = M.a / M.c;
        if (std::isfinite(w0) && std::isfinite(winf) && std::abs(w0 - winf) < tol) {
            return 0.5 * (w0 + winf);
        }
        w_prev = w0;
    }
    (void)w_prev;
    throw NonConvergence("backward_limit: dual starts did not agree within the iteration cap");
}

StationaryHistogram stationary_histogram(const EnsembleSpec& spec, const RiccatiOrbitConfig& cfg,
                                         std::size_t bins, RandomStream rng) {
    if (cfg.z_max < 10.0) throw ValidationError("stationary_histogram: z_max >= 10 required");
    if (cfg.burnin_cells < 1000) {
        throw ValidationError("stationary_histogram: burn-in of at least 1000 cells required");
    }
    RiccatiForwardOrbit orbit(spec, cfg.initial_z, rng);
    for (std::uint64_t j = 0; j < cfg.burnin_cells; ++j) orbit.step();

    StationaryHistogram out{HistogramDensity(-cfg.z_max, cfg.z_max, bins), false};
    // sample the orbit uniformly in x over roughly sample_cells further cells
    const double mean_ell = std::visit(
        [](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, DysonStringSpec>) return s.spacing.mean();
            else if constexpr (std::is_same_v<T, FrischLloydSpec>) return s.mean_spacing;
            else if constexpr (std::is_same_v<T, KronigPenneySpec>) return s.ell;
            else if constexpr (std::is_same_v<T, DysonTypeISpec>) return 1.0;
            else return 1.0;
        },
        spec);
    const auto n_grid = static_cast<std::uint64_t>(
        static_cast<double>(cfg.sample_cells) * mean_ell / cfg.sample_dx);
    orbit.sample_uniform(n_grid, cfg.sample_dx, [&](double z) { out.hist.add(z); });
    out.tail_warning = out.hist.tail_fraction() > 0.05;
    return out;
}

namespace {

/// Mass of the empirical measure pushed forward through the Mobius map of A
/// into [lo, hi), via preimages and the empirical CDF.
double pushforward_mass(const HistogramDensity& h, const Matrix2& Ainv, double pole, double lo,
                        double hi) {
    const double a = mobius_apply(Ainv, lo);
    const double b = mobius_apply(Ainv, hi);
    const bool pole_inside = (pole > lo && pole < hi);
    if (!pole_inside) {
        const double x0 = std::min(a, b), x1 = std::max(a, b);
        return std::max(0.0, h.cdf(x1) - h.cdf(x0));
    }
    // preimage wraps through infinity
    const double x0 = std::min(a, b), x1 = std::max(a, b);
    return std::max(0.0, h.cdf(x0) + (1.0 - h.cdf(x1)));
}

} // namespace

double dyson_schmidt_residual(const HistogramDensity& hist, const EnsembleSpec& spec,
                              RandomStream& rng, int n_draws) {
    if (hist.total() == 0) throw ValidationError("dyson_schmidt_residual: empty histogram");
    const bool is_string = std::holds_alternative<DysonStringSpec>(spec) ||
                           std::holds_alternative<DysonTypeISpec>(spec);
    const double lambda = spectral_parameter(spec);
    MatrixSampler sampler(spec, rng);

    std::vector<double> pushed(hist.bins(), 0.0);
    for (int t = 0; t < n_draws; ++t) {
        const Cell c = sampler.next_cell();
        const Matrix2 A = is_string ? dyson_cell_matrix(lambda, c.ell, c.w)
                                    : schroedinger_cell_matrix(lambda, c.ell, c.w);
        const Matrix2 Ainv = A.inverse_unimodular();
        // pole of the inverse map = image of infinity under A
        const double pole = (A.c != 0.0) ? A.a / A.c : std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < hist.bins(); ++i) {
            pushed[i] += pushforward_mass(hist, Ainv, pole, hist.bin_left(i), hist.bin_right(i)) /
                         static_cast<double>(n_draws);
        }
    }
    double l1 = 0.0;
    const double n = static_cast<double>(hist.total());
    for (std::size_t i = 0; i < hist.bins(); ++i) {
        l1 += std::abs(static_cast<double>(hist.count(i)) / n - pushed[i]);
    }
    return l1;
}

double rice_ids(const HistogramDensity& hist) {
    const double zmax = std::max(std::abs(hist.lo()), std::abs(hist.hi()));
    const double inner = zmax / 10.0;
    std::vector<double> fits;
    for (std::size_t i = 0; i < hist.bins(); ++i) {
        const double zc = hist.bin_center(i);
        if (std::abs(zc) >= inner && hist.count(i) > 0) {
            fits.push_back(zc * zc * hist.density(i));
        }
    }
    if (fits.size() < 4) throw TailUnresolved("rice_ids: too few populated tail bins");
    std::sort(fits.begin(), fits.end());
    const double med = fits[fits.size() / 2];
    const double q1 = fits[fits.size() / 4];
    const double q3 = fits[(3 * fits.size()) / 4];
    if (med <= 0.0 || (q3 - q1) / med > 0.2) {
        throw TailUnresolved("rice_ids: outer-decade fit varies by more than 20%");
    }
    return med;
}

double pv_gamma(const HistogramDensity& hist) {
    if (std::abs(hist.lo() + hist.hi()) > 1e-12 * std::abs(hist.hi())) {
        throw ValidationError("pv_gamma: histogram range must be symmetric about 0");
    }
    const std::size_t nb = hist.bins();
    if (nb % 2 != 0) throw ValidationError("pv_gamma: needs an even bin count");
    // pair bins symmetric about zero so the tails cancel structurally
    double acc = 0.0;
    const double n = static_cast<double>(hist.total());
    if (n == 0.0) return 0.0;
    for (std::size_t i = 0; i < nb / 2; ++i) {
        const std::size_t ip = nb - 1 - i; // mirror of bin i
        const double zl = hist.bin_center(i);
        const double zr = hist.bin_center(ip);
        const double pl = static_cast<double>(hist.count(i)) / n;
        const double pr = static_cast<double>(hist.count(ip)) / n;
        acc += zl * pl + zr * pr;
    }
    return acc;
}

std::vector<double> letac_fixed_point_samples(double p, double a, double b, std::size_t n,
                                              std::uint64_t seed, std::uint64_t burnin) {
    if (!(p > 0.0) || !(a > 0.0) || !(b > 0.0)) {
        throw ValidationError("letac_fixed_point_samples: p, a, b must be positive");
    }
    std::vector<double> out(n);
    parallel_for(static_cast<int>(n), [&](int i) {
        RandomStream rng(seed, static_cast<std::uint64_t>(i));
        double z = 1.0;
        for (std::uint64_t j = 0; j < burnin; ++j) {
            const double g1 = sample_gamma(p, 2.0 / b, rng);
            const double g2 = sample_gamma(p, 2.0 / a, rng);
            z = 1.0 / (g1 + 1.0 / (g2 + z));
        }
        out[static_cast<std::size_t>(i)] = z;
    });
    return out;
}

namespace {

/// Deterministic flight time spent beyond |z| = z_max by the noise-free flow
/// z' = -(z^2 + E): from +inf down to z_max plus from -z_max to -inf.
double tail_flight_time(double z_max, double energy) {
    if (energy > 0.0) {
        const double k = std::sqrt(energy);
        return 2.0 * (kPi / 2.0 - std::atan(z_max / k)) / k;
    }
    if (energy < 0.0) {
        const double k = std::sqrt(-energy);
        // int_{z_max}^inf dz / (z^2 - k^2), doubled
        return std::log((z_max + k) / (z_max - k)) / k;
    }
    return 2.0 / z_max;
}

} // namespace

SdeResult sde_white_noise_run(double energy, double sigma, double length, double dt,
                              const SdeConfig& cfg, RandomStream rng) {
    if (!(sigma > 0.0) || !(length > 0.0)) {
        throw ValidationError("sde_white_noise_run: sigma and length must be positive");
    }
    const double dt_cap = 1e-3 * std::min(1.0, 1.0 / std::sqrt(std::abs(energy) + 1.0));
    if (!(dt > 0.0) || dt > dt_cap * (1.0 + 1e-12)) {
        throw ValidationError("sde_white_noise_run: dt exceeds 1e-3 * min(1, 1/sqrt(|E|+1))");
    }
    const double noise = std::sqrt(sigma * dt);
    const double flight = tail_flight_time(cfg.z_max, energy);

    SdeResult out;
    out.hist = HistogramDensity(-cfg.z_max, cfg.z_max, cfg.hist_bins);
    double z = cfg.z_max;
    double t = 0.0;
    std::uint64_t steps = 0, big_steps = 0, stride = 0;
    CompensatedSum zsum;
    while (t < length) {
        const double drift = -(z * z + energy) * dt;
        const double dz = drift + noise * rng.normal();
        if (std::abs(dz) > 0.5 * cfg.z_max) ++big_steps;
        z += dz;
        t += dt;
        ++steps;
        if (z < -cfg.z_max) {
            ++out.crossings;
            t += flight;
            z = cfg.z_max;
        }
        zsum.add(std::clamp(z, -cfg.gamma_clip, cfg.gamma_clip) * dt);
        if (++stride >= cfg.hist_stride) {
            out.hist.add(z);
            stride = 0;
        }
    }
    if (steps > 0 && static_cast<double>(big_steps) > 1e-3 * static_cast<double>(steps)) {
        throw StepTooLarge("sde_white_noise_run: more than 0.1% of steps moved |Z| by z_max/2");
    }
    out.length = t;
    out.n_estimate = static_cast<double>(out.crossings) / t;
    out.gamma_estimate = zsum.value() / t;
    return out;
}

FirstPassageStats first_passage_stats(double energy, double sigma, std::size_t n_samples,
                                      double window_len, std::uint64_t seed, double z_max,
                                      double dt_scale) {
    if (!(sigma > 0.0)) throw ValidationError("first_passage_stats: sigma must be positive");
    const double k = std::sqrt(std::abs(energy));
    const double dt0 = dt_scale / std::max(1.0, k);
    const double flight = tail_flight_time(z_max, energy);

    std::vector<double> tau(n_samples);
    parallel_for(static_cast<int>(n_samples), [&](int i) {
        RandomStream rng(seed, static_cast<std::uint64_t>(i));
        double z = z_max;
        double t = 0.0;
        for (;;) {
            // adaptive step: resolve the core well on the 1/k scale and the
            // tail flight on the 1/|z| scale
            const double dt = std::min(dt0, 0.05 * std::max(std::abs(z), std::max(k, 1.0)) /
                                                (z * z + std::abs(energy) + 1.0));
            z += -(z * z + energy) * dt + std::sqrt(sigma * dt) * rng.normal();
            t += dt;
            if (z < -z_max) break;
        }
        tau[static_cast<std::size_t>(i)] = t + flight;
    });

    FirstPassageStats out;
    if (window_len > 0.0) {
        out.window_len = window_len;
        // concatenate the renewal gaps in draw order for the window counts
        double t_acc = 0.0;
        std::size_t w = 0;
        std::vector<std::uint64_t> counts;
        std::uint64_t cur = 0;
        for (double g : tau) {
            t_acc += g;
            while (t_acc >= static_cast<double>(w + 1) * window_len) {
                counts.push_back(cur);
                cur = 0;
                ++w;
            }
            ++cur;
        }
        out.window_counts = std::move(counts);
    }
    out.tau = std::move(tau);
    std::sort(out.tau.begin(), out.tau.end());
    const MeanStderr ms = mean_stderr(out.tau);
    out.mean = ms.mean;
    out.stderr_ = ms.stderr_;
    return out;
}

} // namespace drmt
