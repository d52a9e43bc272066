#include "drmt/spectral.hpp"

#include <cmath>
#include <ostream>

#include "drmt/compensated.hpp"
#include "drmt/parallel.hpp"

namespace drmt {

void Realization::write_csv(std::ostream& os) const {
    os << "ell,w\n";
    os << ell0 << ",0\n";
    for (const auto& c : cells) os << c.ell << ',' << c.w << '\n';
}

Realization make_realization(const EnsembleSpec& spec, double length, RandomStream& rng) {
    if (!is_impurity_model(spec)) {
        throw ValidationError("make_realization: spec is not an impurity model");
    }
    if (!(length > 0.0)) throw ValidationError("make_realization: length must be positive");
    Realization real;
    real.kind = (std::holds_alternative<DysonStringSpec>(spec) ||
                 std::holds_alternative<DysonTypeISpec>(spec))
                    ? Realization::Kind::String
                    : Realization::Kind::Schroedinger;
    real.length = length;
    MatrixSampler sampler(spec, rng);
    double acc = sampler.initial_spacing();
    if (acc >= length) {
        real.ell0 = length;
        return real;
    }
    real.ell0 = acc;
    for (;;) {
        Cell c = sampler.next_cell();
        if (acc + c.ell >= length) {
            c.ell = length - acc;
            real.cells.push_back(c);
            break;
        }
        acc += c.ell;
        real.cells.push_back(c);
    }
    return real;
}

namespace {

constexpr double kPi = 3.14159265358979323846;

struct State {
    double p;  // psi'
    double s;  // psi
};

inline void apply_free(Realization::Kind kind, double lambda, double ell, State& st) {
    if (kind == Realization::Kind::String) {
        st.s += ell * st.p;
        return;
    }
    if (lambda > 0.0) {
        const double k = std::sqrt(lambda);
        const double c = std::cos(k * ell), sn = std::sin(k * ell);
        const double p = c * st.p - k * sn * st.s;
        const double s = sn / k * st.p + c * st.s;
        st = {p, s};
    } else if (lambda < 0.0) {
        const double k = std::sqrt(-lambda);
        const double c = std::cosh(k * ell), sn = std::sinh(k * ell);
        const double p = c * st.p + k * sn * st.s;
        const double s = sn / k * st.p + c * st.s;
        st = {p, s};
    } else {
        st.s += ell * st.p;
    }
}

inline void apply_kick(Realization::Kind kind, double lambda, double w, State& st) {
    if (kind == Realization::Kind::String) {
        st.p -= lambda * w * st.s; // mass kick
    } else {
        st.p += w * st.s; // coupling kick
    }
}

inline double strip_phase(double k, const State& st) {
    double th = std::atan2(k * st.s, st.p);
    if (th < 0.0) th += kPi;
    if (th == kPi) th = 0.0;
    return th;
}

inline int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

} // namespace

PropagateResult propagate(const Realization& real, double lambda, const BoundaryData& bc) {
    State st{std::sin(bc.alpha), std::cos(bc.alpha)};
    const bool oscillatory =
        real.kind == Realization::Kind::Schroedinger && lambda > 0.0;
    const double k = oscillatory ? std::sqrt(lambda) : 0.0;

    CompensatedSum log_scale;
    std::uint64_t nodes = 0;

    double theta = oscillatory ? strip_phase(k, st) : 0.0;
    int sign_prev = st.s != 0.0 ? sign_of(st.s) : sign_of(st.p);

    auto do_segment = [&](double ell) {
        if (ell <= 0.0) return;
        if (oscillatory) {
            nodes += static_cast<std::uint64_t>(std::floor((theta + k * ell) / kPi));
            theta = std::fmod(theta + k * ell, kPi);
            apply_free(real.kind, lambda, ell, st);
        } else {
            apply_free(real.kind, lambda, ell, st);
            int sign_new = sign_of(st.s);
            if (sign_new == 0) {
                // exact lattice zero: count it and nudge off by one ulp
                sign_new = -sign_prev;
                st.s = sign_new * 1e-300;
            }
            if (sign_new != sign_prev && sign_prev != 0) ++nodes;
            sign_prev = sign_new;
        }
    };

    do_segment(real.ell0);
    for (const auto& c : real.cells) {
        apply_kick(real.kind, lambda, c.w, st);
        if (oscillatory) theta = strip_phase(k, st);
        do_segment(c.ell);
        // renormalize
        const double r = std::hypot(st.p, st.s);
        if (!(r > 0.0) || !std::isfinite(r)) {
            throw NumericalError("propagate: state vanished or overflowed");
        }
        st.p /= r;
        st.s /= r;
        log_scale.add(std::log(r));
    }

    PropagateResult out;
    out.psi_prime = st.p;
    out.psi = st.s;
    out.log_scale = log_scale.value();
    out.nodes = nodes;
    return out;
}

Estimate ids_node_counting(const EnsembleSpec& spec, double lambda, double length, int replicas,
                           std::uint64_t seed, std::uint64_t stream_base) {
    if (replicas < 1) throw ValidationError("ids_node_counting: replicas must be >= 1");
    const EnsembleSpec at = with_spectral_parameter(spec, lambda);
    std::vector<double> vals(static_cast<std::size_t>(replicas));
    parallel_for(replicas, [&](int r) {
        RandomStream rng(seed, stream_base + static_cast<std::uint64_t>(r));
        const Realization real = make_realization(at, length, rng);
        const PropagateResult pr = propagate(real, lambda, BoundaryData{});
        vals[static_cast<std::size_t>(r)] = static_cast<double>(pr.nodes) / length;
    });
    const MeanStderr ms = mean_stderr(vals);
    Estimate e;
    e.value = ms.mean;
    e.stderr_ = ms.stderr_;
    e.n = static_cast<std::uint64_t>(replicas);
    e.seed = seed;
    e.model = model_tag(spec);
    return e;
}

ComplexLyapunovEstimate complex_lyapunov(const EnsembleSpec& spec, double lambda, double length,
                                         int replicas, std::uint64_t seed,
                                         std::uint64_t stream_base) {
    if (replicas < 1) throw ValidationError("complex_lyapunov: replicas must be >= 1");
    const EnsembleSpec at = with_spectral_parameter(spec, lambda);
    std::vector<double> gammas(static_cast<std::size_t>(replicas));
    std::vector<double> ns(static_cast<std::size_t>(replicas));
    parallel_for(replicas, [&](int r) {
        RandomStream rng(seed, stream_base + static_cast<std::uint64_t>(r));
        const Realization real = make_realization(at, length, rng);
        const PropagateResult pr = propagate(real, lambda, BoundaryData{});
        gammas[static_cast<std::size_t>(r)] =
            (pr.log_scale + std::log(std::hypot(pr.psi_prime, pr.psi))) / length;
        ns[static_cast<std::size_t>(r)] = static_cast<double>(pr.nodes) / length;
    });
    const MeanStderr g = mean_stderr(gammas);
    const MeanStderr n = mean_stderr(ns);
    ComplexLyapunovEstimate e;
    e.value = {g.mean, -kPi * n.mean};
    e.re_stderr = g.stderr_;
    e.im_stderr = kPi * n.stderr_;
    e.n = static_cast<std::uint64_t>(replicas);
    e.seed = seed;
    e.model = model_tag(spec);
    return e;
}

namespace {

using Cplx = std::complex<double>;

struct ProjCplx {
    Cplx x1, x2; // point x1/x2 of the complex projective line

    void normalize() {
        const double m = std::max(std::abs(x1), std::abs(x2));
        if (m > 0.0 && std::isfinite(m)) {
            x1 /= m;
            x2 /= m;
        }
    }
    void apply(Cplx a, Cplx b, Cplx c, Cplx d) {
        const Cplx y1 = a * x1 + b * x2;
        const Cplx y2 = c * x1 + d * x2;
        x1 = y1;
        x2 = y2;
        normalize();
    }
};

/// cos(k ell) and sin(k ell)/k for complex lambda = k^2; both are even in k,
/// hence single-valued in lambda. Small arguments go through series.
void schroedinger_entries(Cplx lambda, double ell, Cplx& c, Cplx& s_over_k) {
    const Cplx k = std::sqrt(lambda);
    const Cplx ka = k * ell;
    if (std::abs(ka) < 1e-4) {
        const Cplx ka2 = ka * ka;
        c = 1.0 - ka2 / 2.0 + ka2 * ka2 / 24.0;
        s_over_k = ell * (1.0 - ka2 / 6.0 + ka2 * ka2 / 120.0);
        return;
    }
    c = std::cos(ka);
    s_over_k = std::sin(ka) / k;
}

} // namespace

std::complex<double> weyl_cf_truncated(const Realization& real, std::complex<double> lambda,
                                       const BoundaryData& bc) {
    // backward evaluation from the right boundary slope
    ProjCplx x;
    if (std::isinf(bc.z_r)) {
        x = {1.0, 0.0};
    } else {
        x = {bc.z_r, 1.0};
    }

    // hyperbolic segments overflow cosh beyond |Im k| ell ~ 700; split them
    const double imk = std::abs(std::sqrt(lambda).imag());
    const double max_step = (imk > 0.0) ? 200.0 / imk : std::numeric_limits<double>::infinity();

    auto free_inverse = [&](double ell) {
        if (ell <= 0.0) return;
        if (real.kind == Realization::Kind::String) {
            // [[1,0],[ell,1]]^{-1} = [[1,0],[-ell,1]]
            x.apply(1.0, 0.0, -ell, 1.0);
            return;
        }
        double remaining = ell;
        while (remaining > 0.0) {
            const double step = std::min(remaining, max_step);
            Cplx c, sk;
            schroedinger_entries(lambda, step, c, sk);
            // [[c, -lambda*sk],[sk, c]]^{-1} = [[c, lambda*sk],[-sk, c]] (det = 1)
            x.apply(c, lambda * sk, -sk, c);
            remaining -= step;
        }
    };
    auto kick_inverse = [&](double w) {
        if (real.kind == Realization::Kind::String) {
            // [[1,-lambda m],[0,1]]^{-1} = [[1, lambda m],[0,1]]
            x.apply(1.0, lambda * w, 0.0, 1.0);
        } else {
            x.apply(1.0, -w, 0.0, 1.0);
        }
    };

    for (auto it = real.cells.rbegin(); it != real.cells.rend(); ++it) {
        free_inverse(it->ell);
        kick_inverse(it->w);
    }
    free_inverse(real.ell0);

    // alpha map: w = (X sin a + cos a) / (sin a - X cos a), projectively
    const double sa = std::sin(bc.alpha), ca = std::cos(bc.alpha);
    const Cplx num = x.x1 * sa + x.x2 * ca;
    const Cplx den = x.x2 * sa - x.x1 * ca;
    if (std::abs(den) == 0.0) {
        throw PoleHit("weyl_cf_truncated: evaluation landed on an eigenvalue");
    }
    const Cplx w = num / den;
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
        throw PoleHit("weyl_cf_truncated: evaluation landed on an eigenvalue");
    }
    return w;
}

std::vector<double> stieltjes_density(const std::vector<std::complex<double>>& w_values) {
    std::vector<double> out;
    out.reserve(w_values.size());
    for (const auto& w : w_values) out.push_back(w.imag() / kPi);
    return out;
}

MeanDensityResult mean_spectral_density(const EnsembleSpec& spec, const std::vector<double>& grid,
                                        double eps, double length, int replicas,
                                        std::uint64_t seed, const BoundaryData& bc) {
    if (!(eps > 0.0)) throw ValidationError("mean_spectral_density: eps must be positive");
    MeanDensityResult out;
    out.density.assign(grid.size(), 0.0);
    std::vector<double> half(grid.size(), 0.0);

    std::vector<std::vector<double>> per_rep(static_cast<std::size_t>(replicas));
    std::vector<std::vector<double>> per_rep_half(static_cast<std::size_t>(replicas));
    parallel_for(replicas, [&](int r) {
        RandomStream rng(seed, static_cast<std::uint64_t>(r));
        const Realization real = make_realization(spec, length, rng);
        auto& mine = per_rep[static_cast<std::size_t>(r)];
        auto& mine_half = per_rep_half[static_cast<std::size_t>(r)];
        mine.resize(grid.size());
        mine_half.resize(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            mine[i] = weyl_cf_truncated(real, {grid[i], eps}, bc).imag() / kPi;
            mine_half[i] = weyl_cf_truncated(real, {grid[i], eps / 2.0}, bc).imag() / kPi;
        }
    });
    for (int r = 0; r < replicas; ++r) {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            out.density[i] += per_rep[static_cast<std::size_t>(r)][i] / replicas;
            half[i] += per_rep_half[static_cast<std::size_t>(r)][i] / replicas;
        }
    }
    double scale = 0.0;
    for (double v : out.density) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (std::abs(half[i] - out.density[i]) > 0.05 * scale) {
            out.eps_warning = true;
            break;
        }
    }
    return out;
}

} // namespace drmt
