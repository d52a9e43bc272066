#include "drmt/scattering.hpp"

#include <cmath>

#include "drmt/compensated.hpp"
#include "drmt/halfplane.hpp"
#include "drmt/parallel.hpp"

namespace drmt {

namespace {

constexpr double kPi = 3.14159265358979323846;
using Cplx = std::complex<double>;

struct ScaledProduct {
    Matrix2 m = Matrix2::identity();
    double log_scale = 0.0;

    void premultiply(const Matrix2& a) {
        m = compose(a, m);
        const double s = m.frobenius();
        if (!(s > 0.0) || !std::isfinite(s)) throw NumericalError("scatter: degenerate product");
        m = m.scaled(1.0 / s);
        log_scale += std::log(s);
    }
};

void check_scatter_realization(const Realization& real, double k) {
    if (real.kind != Realization::Kind::Schroedinger) {
        throw ValidationError("scattering: needs a Schroedinger realization (E = k^2 > 0)");
    }
    if (k != 1.0) {
        throw ValidationError(
            "scattering: k is fixed to 1; rescale lengths (k ell) and couplings (v / k) instead");
    }
}

} // namespace

double transmission_sq_from_product(const Matrix2& pi) {
    return 4.0 / (2.0 + pi.frobenius_sq());
}

ScatterResult rt_coefficients(const Realization& real, double k) {
    check_scatter_realization(real, k);
    const double energy = 1.0;

    // backward half-plane orbit for R: X = A_0^{-1} ... A_n^{-1} (i)
    HalfPlanePoint x{0.0, 1.0};
    for (auto it = real.cells.rbegin(); it != real.cells.rend(); ++it) {
        const Matrix2 a = schroedinger_cell_matrix(energy, it->ell, it->w);
        x = mobius_apply(a.inverse_unimodular(), x);
    }
    x = mobius_apply(schroedinger_free_matrix(energy, real.ell0).inverse_unimodular(), x);
    const Cplx xi = x.as_complex();
    const Cplx i(0.0, 1.0);
    const Cplx r = -(xi - i) / (xi + i);

    // forward product for |T| (tracked in log scale)
    ScaledProduct prod;
    for (const auto& c : real.cells) {
        prod.premultiply(schroedinger_cell_matrix(energy, c.ell, c.w));
    }
    const double log_t_sq =
        std::log(4.0) - 2.0 * prod.log_scale -
        std::log(2.0 * std::exp(-2.0 * prod.log_scale) + prod.m.frobenius_sq());
    const double t_abs = std::exp(0.5 * log_t_sq);

    // T phase from wave matching on the scaled full transfer matrix
    const Matrix2 a0 = schroedinger_free_matrix(energy, real.ell0);
    const Matrix2 mtot = compose(prod.m, a0);
    const Cplx s = mtot.c * (i * (1.0 - r)) + mtot.d * (1.0 + r);
    const double phase_t = std::arg(s) - real.length;

    ScatterResult out;
    out.r = r;
    out.t = t_abs * Cplx(std::cos(phase_t), std::sin(phase_t));
    out.length = real.length;
    out.k = k;
    return out;
}

ScatterResult rt_wave_matching(const Realization& real) {
    check_scatter_realization(real, 1.0);
    const double energy = 1.0;
    Matrix2 m = schroedinger_free_matrix(energy, real.ell0);
    for (const auto& c : real.cells) m = compose(schroedinger_cell_matrix(energy, c.ell, c.w), m);

    const Cplx i(0.0, 1.0);
    // psi(0) = 1 + R, psi'(0) = i (1 - R); right side a pure transmitted wave
    const Cplx p0 = m.a * i + m.b, s0 = m.c * i + m.d;        // image of (i, 1)
    const Cplx p1 = -m.a * i + m.b, s1 = -m.c * i + m.d;      // image of (-i, 1)
    const Cplx r = (i * s0 - p0) / (p1 - i * s1);
    const Cplx t_raw = s0 + r * s1;
    ScatterResult out;
    out.r = r;
    out.t = t_raw * std::exp(-i * real.length);
    out.length = real.length;
    out.k = 1.0;
    return out;
}

DecayFit decay_rate(const EnsembleSpec& spec, const std::vector<double>& lengths, int replicas,
                    std::uint64_t seed) {
    if (!is_impurity_model(spec) || spectral_parameter(spec) != 1.0) {
        throw ValidationError("decay_rate: spec must be an impurity model at E = 1 (k = 1)");
    }
    if (lengths.size() < 2) throw ValidationError("decay_rate: need at least two lengths");
    DecayFit fit;
    fit.lengths = lengths;
    fit.mean_log_t.resize(lengths.size());
    for (std::size_t li = 0; li < lengths.size(); ++li) {
        std::vector<double> vals(static_cast<std::size_t>(replicas));
        parallel_for(replicas, [&](int rep) {
            RandomStream rng(seed, (static_cast<std::uint64_t>(li) << 32) + static_cast<std::uint64_t>(rep));
            const Realization real = make_realization(spec, lengths[li], rng);
            const ScatterResult sc = rt_coefficients(real);
            vals[static_cast<std::size_t>(rep)] = std::log(std::abs(sc.t));
        });
        fit.mean_log_t[li] = mean_stderr(vals).mean;
    }
    const LineFit lf = fit_line(fit.lengths, fit.mean_log_t);
    fit.slope = lf.slope;
    fit.intercept = lf.intercept;
    fit.r2 = lf.r2;
    // a bad line through data that really does decay is a failed fit; a flat
    // in-band trace with r2 near zero is not
    const double efolds = std::abs(fit.slope) * (lengths.back() - lengths.front());
    if (lf.r2 < 0.99 && efolds > 1.0) {
        throw FitUnstable("decay_rate: fit r^2 below 0.99 over a decaying range");
    }
    return fit;
}

double reflexion_phase_sample(const EnsembleSpec& spec, RandomStream& rng, double tol,
                              std::uint64_t cap) {
    if (!is_impurity_model(spec) || spectral_parameter(spec) != 1.0) {
        throw ValidationError("reflexion_phase_sample: spec must be at E = 1");
    }
    MatrixSampler sampler(spec, rng);
    Matrix2 m = schroedinger_free_matrix(1.0, sampler.initial_spacing()).inverse_unimodular();
    Cplx x_prev(0.0, 1.0);
    for (std::uint64_t j = 0; j < cap; ++j) {
        const Cell c = sampler.next_cell();
        m = compose(m, schroedinger_cell_matrix(1.0, c.ell, c.w).inverse_unimodular());
        const double s = m.frobenius();
        m = m.scaled(1.0 / s);
        const Cplx x = mobius_apply(m, Cplx(0.0, 1.0));
        if (std::abs(x.imag()) < tol && std::abs(x - x_prev) < tol) {
            return 2.0 * std::atan(x.real());
        }
        x_prev = x;
    }
    throw NonConvergence("reflexion_phase_sample: backward iterates did not settle");
}

PhaseHistogram reflexion_phase_histogram(const EnsembleSpec& spec, std::size_t samples,
                                         std::uint64_t seed, std::size_t bins) {
    PhaseHistogram out{HistogramDensity(-kPi, kPi, bins), false};
    if (const auto* fl = std::get_if<FrischLloydSpec>(&spec)) {
        if (fl->coupling.kind == ScalarDist::Kind::Constant && fl->coupling.p1 == 0.0) {
            out.degenerate = true; // free case reflects nothing, R = 0
            return out;
        }
    }
    std::vector<double> phases(samples);
    parallel_for(static_cast<int>(samples), [&](int i) {
        RandomStream rng(seed, static_cast<std::uint64_t>(i));
        phases[static_cast<std::size_t>(i)] = reflexion_phase_sample(spec, rng);
    });
    for (double th : phases) out.hist.add(th);
    return out;
}

std::vector<double> phase_density_from_f(const HistogramDensity& f_hist,
                                         const std::vector<double>& theta_edges) {
    if (theta_edges.size() < 2) throw ValidationError("phase_density_from_f: need edges");
    std::vector<double> masses(theta_edges.size() - 1, 0.0);
    auto z_of_theta = [](double th) {
        // X_inf = tan(theta/2) and -X_inf is f-distributed
        if (std::abs(th) >= kPi) return th > 0 ? -std::numeric_limits<double>::infinity()
                                               : std::numeric_limits<double>::infinity();
        return -std::tan(0.5 * th);
    };
    for (std::size_t i = 0; i + 1 < theta_edges.size(); ++i) {
        const double z_hi = z_of_theta(theta_edges[i]);     // decreasing map
        const double z_lo = z_of_theta(theta_edges[i + 1]);
        const double flo = std::isinf(z_lo) ? (z_lo < 0 ? 0.0 : 1.0) : f_hist.cdf(z_lo);
        const double fhi = std::isinf(z_hi) ? (z_hi < 0 ? 0.0 : 1.0) : f_hist.cdf(z_hi);
        masses[i] = std::max(0.0, fhi - flo);
    }
    return masses;
}

} // namespace drmt
