#include "drmt/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "drmt/compensated.hpp"

namespace drmt {

namespace {

ProjectivePoint default_start(RandomStream& rng) {
    const double th = rng.uniform(0.0, 3.14159265358979323846);
    return ProjectivePoint::from_vec(std::cos(th), std::sin(th));
}

double step_log_growth(const Matrix2& A, ProjectivePoint& u) {
    const double w1 = A.a * u.u1 + A.b * u.u2;
    const double w2 = A.c * u.u1 + A.d * u.u2;
    const double r = std::hypot(w1, w2);
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw NumericalError("gamma estimator: |A u| vanished or overflowed");
    }
    u.u1 = w1 / r;
    u.u2 = w2 / r;
    u.canonicalize();
    return std::log(r);
}

} // namespace

Estimate gamma_norm_growth(const EnsembleSpec& spec, std::uint64_t n, RandomStream rng,
                           const NormGrowthOptions& opts) {
    if (n < 1) throw ValidationError("gamma_norm_growth: n must be positive");
    MatrixSampler sampler(spec, rng);
    RandomStream aux(rng.master_seed(), rng.stream_index() + (1ull << 32));
    ProjectivePoint u = opts.start ? *opts.start : default_start(aux);

    for (std::uint64_t j = 0; j < opts.burnin; ++j) {
        (void)step_log_growth(sampler.next(), u);
    }

    const int ri = std::max(1, opts.renorm_interval);
    BatchMeans bm(std::max<std::uint64_t>(1, n / 64));
    CompensatedSum total;
    if (ri == 1) {
        for (std::uint64_t j = 0; j < n; ++j) {
            const double y = step_log_growth(sampler.next(), u);
            bm.add(y);
            total.add(y);
        }
    } else {
        // renormalize only every ri steps; the group contributes its summed log
        std::uint64_t j = 0;
        while (j < n) {
            double v1 = u.u1, v2 = u.u2;
            const std::uint64_t m = std::min<std::uint64_t>(ri, n - j);
            for (std::uint64_t t = 0; t < m; ++t) {
                const Matrix2 A = sampler.next();
                const double w1 = A.a * v1 + A.b * v2;
                const double w2 = A.c * v1 + A.d * v2;
                v1 = w1;
                v2 = w2;
            }
            const double r = std::hypot(v1, v2);
            if (!(r > 0.0) || !std::isfinite(r)) {
                throw NumericalError("gamma estimator: |A u| vanished or overflowed");
            }
            u = ProjectivePoint::from_vec(v1, v2);
            total.add(std::log(r));
            for (std::uint64_t t = 0; t < m; ++t) bm.add(std::log(r) / static_cast<double>(m));
            j += m;
        }
    }

    Estimate e;
    e.value = total.value() / static_cast<double>(n);
    e.stderr_ = bm.stderr_of_mean();
    e.n = n;
    e.seed = rng.master_seed();
    e.model = model_tag(spec);
    return e;
}

Estimate gamma_product_norm(const EnsembleSpec& spec, std::uint64_t n, RandomStream rng,
                            MatrixNorm norm) {
    MatrixSampler sampler(spec, rng);
    Matrix2 P = Matrix2::identity();
    CompensatedSum logscale;
    BatchMeans bm(std::max<std::uint64_t>(1, n / 64));
    auto norm_of = [norm](const Matrix2& M) {
        return norm == MatrixNorm::Frobenius ? M.frobenius() : M.op_norm();
    };
    double prev = 0.0;
    for (std::uint64_t j = 0; j < n; ++j) {
        P = compose(sampler.next(), P);
        const double s = P.frobenius();
        if (!(s > 0.0) || !std::isfinite(s)) throw NumericalError("gamma_product_norm: degenerate product");
        const double cur = logscale.value() + std::log(norm_of(P));
        bm.add(cur - prev);
        prev = cur;
        P = P.scaled(1.0 / s);
        logscale.add(std::log(s));
    }
    Estimate e;
    e.value = (logscale.value() + std::log(norm_of(P))) / static_cast<double>(n);
    e.stderr_ = bm.stderr_of_mean();
    e.n = n;
    e.seed = rng.master_seed();
    e.model = model_tag(spec);
    return e;
}

FurstenbergResult gamma_furstenberg(const EnsembleSpec& spec, std::uint64_t burnin, std::uint64_t n,
                                    RandomStream rng, std::optional<ProjectivePoint> start) {
    MatrixSampler chain_sampler(spec, rng);
    RandomStream fresh_rng(rng.master_seed(), rng.stream_index() + (1ull << 33));
    MatrixSampler fresh_sampler(spec, fresh_rng);
    RandomStream aux(rng.master_seed(), rng.stream_index() + (1ull << 34));
    ProjectivePoint u = start ? *start : default_start(aux);

    for (std::uint64_t j = 0; j < burnin; ++j) u = apply(chain_sampler.next(), u);

    // crude support count for the trapped-orbit warning
    std::set<long long> atoms;

    BatchMeans bm(std::max<std::uint64_t>(1, n / 64));
    for (std::uint64_t j = 0; j < n; ++j) {
        const Matrix2 B = fresh_sampler.next();
        const double w1 = B.a * u.u1 + B.b * u.u2;
        const double w2 = B.c * u.u1 + B.d * u.u2;
        const double r = std::hypot(w1, w2);
        if (!(r > 0.0) || !std::isfinite(r)) {
            throw NumericalError("gamma_furstenberg: |B u| vanished or overflowed");
        }
        bm.add(std::log(r));
        if (atoms.size() < 8) {
            atoms.insert(static_cast<long long>(std::floor(std::atan2(u.u2, u.u1) / 1e-9)));
        }
        u = apply(chain_sampler.next(), u);
    }

    FurstenbergResult out;
    out.estimate.value = bm.mean();
    out.estimate.stderr_ = bm.stderr_of_mean();
    out.estimate.n = n;
    out.estimate.seed = rng.master_seed();
    out.estimate.model = model_tag(spec);
    out.trapped_orbit_warning = atoms.size() < 3;
    return out;
}

namespace {

constexpr double kAngularDedup = 1e-9;

bool contains_point(const std::vector<ProjectivePoint>& set, const ProjectivePoint& p) {
    for (const auto& q : set) {
        if (angular_distance(p, q) < kAngularDedup) return true;
    }
    return false;
}

/// Real projective fixed points of the Mobius map of A.
std::vector<ProjectivePoint> fixed_points(const Matrix2& A) {
    std::vector<ProjectivePoint> out;
    // c z^2 + (d - a) z - b = 0 ; z = infinity is fixed iff c == 0
    if (A.c == 0.0) {
        out.push_back(ProjectivePoint::infinity_point());
        if (A.d != A.a) out.push_back(ProjectivePoint::from_slope(A.b / (A.a - A.d)));
        return out;
    }
    const double disc = (A.d - A.a) * (A.d - A.a) + 4.0 * A.b * A.c;
    if (disc < 0.0) return out;
    const double sq = std::sqrt(disc);
    out.push_back(ProjectivePoint::from_slope((A.a - A.d + sq) / (2.0 * A.c)));
    if (disc > 0.0) out.push_back(ProjectivePoint::from_slope((A.a - A.d - sq) / (2.0 * A.c)));
    return out;
}

} // namespace

IrreducibilityVerdict strong_irreducibility(const std::vector<std::pair<Matrix2, double>>& support,
                                            int depth, std::size_t cap) {
    IrreducibilityVerdict verdict;
    if (support.empty()) throw ValidationError("strong_irreducibility: empty support");
    for (const auto& [A, w] : support) {
        (void)w;
        if (A.det() == 0.0 || !A.finite()) {
            throw ValidationError("strong_irreducibility: support must be invertible");
        }
    }

    // fixed points of every word up to the requested depth
    std::vector<Matrix2> words{Matrix2::identity()};
    std::vector<ProjectivePoint> candidates;
    for (int d = 0; d < depth; ++d) {
        std::vector<Matrix2> next;
        next.reserve(words.size() * support.size());
        for (const auto& W : words) {
            for (const auto& [A, wgt] : support) {
                (void)wgt;
                Matrix2 P = compose(A, W);
                const double s = P.frobenius();
                P = P.scaled(1.0 / s);
                next.push_back(P);
                for (const auto& fp : fixed_points(P)) {
                    if (!contains_point(candidates, fp)) candidates.push_back(fp);
                }
            }
        }
        words = std::move(next);
        if (words.size() > 4096) break; // word explosion guard
    }

    if (candidates.empty()) {
        verdict.tag = IrreducibilityVerdict::Tag::Inconclusive;
        return verdict;
    }

    // try to close each candidate orbit under all generators
    std::vector<ProjectivePoint> closed_union;
    bool found_closed = false;
    for (const auto& seed : candidates) {
        std::vector<ProjectivePoint> orbit{seed};
        bool exceeded = false;
        for (std::size_t i = 0; i < orbit.size() && !exceeded; ++i) {
            for (const auto& [A, w] : support) {
                (void)w;
                const ProjectivePoint img = apply(A, orbit[i]);
                if (!contains_point(orbit, img)) {
                    orbit.push_back(img);
                    if (orbit.size() > cap) {
                        exceeded = true;
                        break;
                    }
                }
            }
        }
        if (!exceeded) {
            found_closed = true;
            for (const auto& p : orbit) {
                if (!contains_point(closed_union, p)) closed_union.push_back(p);
            }
        }
    }

    if (found_closed) {
        // verify invariance of the union under every generator before returning
        for (const auto& p : closed_union) {
            for (const auto& [A, w] : support) {
                (void)w;
                if (!contains_point(closed_union, apply(A, p))) {
                    verdict.tag = IrreducibilityVerdict::Tag::Inconclusive;
                    return verdict;
                }
            }
        }
        verdict.tag = IrreducibilityVerdict::Tag::FiniteInvariantSet;
        verdict.witness = closed_union;
        return verdict;
    }

    // no closed set up to the cap: every candidate orbit exceeded it, which in
    // particular means more than 2 distinct images everywhere we looked
    verdict.tag = IrreducibilityVerdict::Tag::Irreducible;
    return verdict;
}

std::vector<std::pair<Matrix2, double>> finite_support(const EnsembleSpec& spec) {
    if (std::holds_alternative<FibonacciSpec>(spec)) {
        return {{Matrix2{1, 1, 1, 0}, 1.0}};
    }
    if (std::holds_alternative<RandomFibonacciSpec>(spec)) {
        return {{Matrix2{1, 1, 1, 0}, 0.5}, {Matrix2{-1, 1, 1, 0}, 0.5}};
    }
    if (const auto* b = std::get_if<BougerolLacroixSpec>(&spec)) {
        return {{Matrix2{b->alpha, 0, 0, 1.0 / b->alpha}, b->p}, {Matrix2{0, -1, 1, 0}, 1.0 - b->p}};
    }
    throw ValidationError("finite_support: spec does not have finite support");
}

} // namespace drmt
