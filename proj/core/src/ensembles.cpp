#include "drmt/ensembles.hpp"

#include <cmath>

#include "drmt/specfun.hpp"

namespace drmt {

namespace {
constexpr double kTwoPi = 6.283185307179586476925287;

template <class... Ts>
struct Overload : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;
} // namespace

void validate(const EnsembleSpec& spec) {
    std::visit(Overload{
                   [](const DysonStringSpec& s) {
                       s.mass.validate("mass");
                       s.spacing.validate("spacing");
                       if (!s.mass.strictly_positive()) {
                           throw ValidationError("dyson-string: masses must be strictly positive");
                       }
                       if (!s.spacing.strictly_positive()) {
                           throw ValidationError("dyson-string: spacings must be strictly positive");
                       }
                       if (!std::isfinite(s.lambda)) throw ValidationError("dyson-string: lambda must be finite");
                   },
                   [](const DysonTypeISpec& s) {
                       if (!(s.p > 0.0) || !(s.q > 0.0)) {
                           throw ValidationError("dyson-type-i: p and q must be positive");
                       }
                       if (!std::isfinite(s.lambda)) throw ValidationError("dyson-type-i: lambda must be finite");
                   },
                   [](const FrischLloydSpec& s) {
                       s.coupling.validate("coupling");
                       if (!(s.mean_spacing > 0.0)) {
                           throw ValidationError("frisch-lloyd: mean spacing must be positive");
                       }
                       if (!std::isfinite(s.energy)) throw ValidationError("frisch-lloyd: energy must be finite");
                   },
                   [](const KronigPenneySpec& s) {
                       if (!(s.ell > 0.0)) throw ValidationError("kronig-penney: ell must be positive");
                       if (!std::isfinite(s.v) || !std::isfinite(s.energy)) {
                           throw ValidationError("kronig-penney: parameters must be finite");
                       }
                   },
                   [](const AndersonSpec& s) {
                       s.potential.validate("potential");
                       if (!std::isfinite(s.energy)) throw ValidationError("anderson: energy must be finite");
                   },
                   [](const IsingChainSpec& s) {
                       s.field.validate("field");
                       if (!(s.beta > 0.0)) throw ValidationError("ising-chain: beta must be positive");
                       if (!std::isfinite(s.coupling)) throw ValidationError("ising-chain: J must be finite");
                   },
                   [](const FibonacciSpec&) {},
                   [](const RandomFibonacciSpec&) {},
                   [](const BougerolLacroixSpec& s) {
                       if (!(s.alpha > 0.0)) throw ValidationError("bougerol-lacroix: alpha must be positive");
                       if (!(s.p >= 0.0 && s.p <= 1.0)) {
                           throw ValidationError("bougerol-lacroix: p must lie in [0,1]");
                       }
                   },
                   [](const CohenNewmanSpec& s) {
                       if (s.alpha == 0.0 || !std::isfinite(s.alpha) || !std::isfinite(s.beta)) {
                           throw ValidationError("cohen-newman: requires alpha != 0, finite parameters");
                       }
                   },
               },
               spec);
}

std::string model_tag(const EnsembleSpec& spec) {
    return std::visit(Overload{
                          [](const DysonStringSpec&) { return std::string("dyson-string"); },
                          [](const DysonTypeISpec&) { return std::string("dyson-type-i"); },
                          [](const FrischLloydSpec&) { return std::string("frisch-lloyd"); },
                          [](const KronigPenneySpec&) { return std::string("kronig-penney"); },
                          [](const AndersonSpec&) { return std::string("anderson"); },
                          [](const IsingChainSpec&) { return std::string("ising-chain"); },
                          [](const FibonacciSpec&) { return std::string("fibonacci"); },
                          [](const RandomFibonacciSpec&) { return std::string("random-fibonacci"); },
                          [](const BougerolLacroixSpec&) { return std::string("bougerol-lacroix"); },
                          [](const CohenNewmanSpec&) { return std::string("cohen-newman"); },
                      },
                      spec);
}

bool is_impurity_model(const EnsembleSpec& spec) {
    return std::holds_alternative<DysonStringSpec>(spec) ||
           std::holds_alternative<DysonTypeISpec>(spec) ||
           std::holds_alternative<FrischLloydSpec>(spec) ||
           std::holds_alternative<KronigPenneySpec>(spec);
}

double spectral_parameter(const EnsembleSpec& spec) {
    return std::visit(Overload{
                          [](const DysonStringSpec& s) { return s.lambda; },
                          [](const DysonTypeISpec& s) { return s.lambda; },
                          [](const FrischLloydSpec& s) { return s.energy; },
                          [](const KronigPenneySpec& s) { return s.energy; },
                          [](const AndersonSpec& s) { return s.energy; },
                          [](const auto&) -> double {
                              throw ValidationError("spectral_parameter: not an impurity model");
                          },
                      },
                      spec);
}

EnsembleSpec with_spectral_parameter(EnsembleSpec spec, double lambda) {
    std::visit(Overload{
                   [lambda](DysonStringSpec& s) { s.lambda = lambda; },
                   [lambda](DysonTypeISpec& s) { s.lambda = lambda; },
                   [lambda](FrischLloydSpec& s) { s.energy = lambda; },
                   [lambda](KronigPenneySpec& s) { s.energy = lambda; },
                   [lambda](AndersonSpec& s) { s.energy = lambda; },
                   [](auto&) { throw ValidationError("with_spectral_parameter: not an impurity model"); },
               },
               spec);
    return spec;
}

Matrix2 dyson_cell_matrix(double lambda, double ell, double mass) {
    // [[1,0],[ell,1]] * [[1,-lambda m],[0,1]]
    return {1.0, -lambda * mass, ell, 1.0 - lambda * mass * ell};
}

Matrix2 dyson_free_matrix(double ell) { return {1.0, 0.0, ell, 1.0}; }

Matrix2 schroedinger_free_matrix(double energy, double ell) {
    if (energy > 0.0) {
        const double k = std::sqrt(energy);
        const double c = std::cos(k * ell), s = std::sin(k * ell);
        return {c, -k * s, s / k, c};
    }
    if (energy < 0.0) {
        const double k = std::sqrt(-energy);
        const double c = std::cosh(k * ell), s = std::sinh(k * ell);
        return {c, k * s, s / k, c};
    }
    return {1.0, 0.0, ell, 1.0};
}

Matrix2 schroedinger_cell_matrix(double energy, double ell, double v) {
    const Matrix2 f = schroedinger_free_matrix(energy, ell);
    // f * [[1, v],[0,1]]
    return {f.a, f.a * v + f.b, f.c, f.c * v + f.d};
}

Matrix2 anderson_matrix(double energy, double site_potential) {
    // state (psi_{n+1}, psi_n) with -psi_{n+1} + V_n psi_n - psi_{n-1} = E psi_n
    return {site_potential - energy, -1.0, 1.0, 0.0};
}

Matrix2 ising_transfer_matrix(double beta, double J, double h) {
    return {std::exp(beta * (J + h)), std::exp(beta * (-J + h)),
            std::exp(beta * (-J - h)), std::exp(beta * (J - h))};
}

Matrix2 cohen_newman_matrix(double alpha, double beta, double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    // [[alpha, beta],[0, 1/alpha]] * rotation(theta)
    return {alpha * c + beta * s, -alpha * s + beta * c, s / alpha, c / alpha};
}

MatrixSampler::MatrixSampler(const EnsembleSpec& spec, RandomStream rng)
    : spec_(spec), rng_(rng) {
    validate(spec_);
}

double MatrixSampler::initial_spacing() {
    return std::visit(Overload{
                          [this](const DysonStringSpec& s) { return s.spacing.sample(rng_); },
                          [this](const DysonTypeISpec&) {
                              if (typei_started_) {
                                  throw ValidationError(
                                      "MatrixSampler: type-I initial spacing must be drawn first");
                              }
                              auto& s = std::get<DysonTypeISpec>(spec_);
                              const double c0 = sample_gamma(s.p, s.q, rng_);
                              typei_prev_ell_ = 1.0 / c0;
                              typei_started_ = true;
                              return typei_prev_ell_;
                          },
                          [this](const FrischLloydSpec& s) { return rng_.exponential(s.mean_spacing); },
                          [](const KronigPenneySpec& s) { return s.ell; },
                          [](const auto&) -> double {
                              throw ValidationError("initial_spacing: not an impurity model");
                          },
                      },
                      spec_);
}

Cell MatrixSampler::next_cell() {
    return std::visit(
        Overload{
            [this](const DysonStringSpec& s) {
                return Cell{s.mass.sample(rng_), s.spacing.sample(rng_)};
            },
            [this](const DysonTypeISpec& s) {
                if (!typei_started_) {
                    const double c0 = sample_gamma(s.p, s.q, rng_);
                    typei_prev_ell_ = 1.0 / c0;
                    typei_started_ = true;
                }
                const double codd = sample_gamma(s.p, s.q, rng_);
                const double m = 1.0 / (codd * typei_prev_ell_);
                const double ceven = sample_gamma(s.p, s.q, rng_);
                const double ell = 1.0 / (ceven * m);
                typei_prev_ell_ = ell;
                ++typei_index_;
                return Cell{m, ell};
            },
            [this](const FrischLloydSpec& s) {
                return Cell{s.coupling.sample(rng_), rng_.exponential(s.mean_spacing)};
            },
            [](const KronigPenneySpec& s) { return Cell{s.v, s.ell}; },
            [](const auto&) -> Cell {
                throw ValidationError("next_cell: not an impurity model");
            },
        },
        spec_);
}

Matrix2 MatrixSampler::next() {
    return std::visit(
        Overload{
            [this](const DysonStringSpec& s) {
                const Cell c = next_cell();
                return dyson_cell_matrix(s.lambda, c.ell, c.w);
            },
            [this](const DysonTypeISpec& s) {
                const Cell c = next_cell();
                return dyson_cell_matrix(s.lambda, c.ell, c.w);
            },
            [this](const FrischLloydSpec& s) {
                const Cell c = next_cell();
                return schroedinger_cell_matrix(s.energy, c.ell, c.w);
            },
            [this](const KronigPenneySpec& s) {
                return schroedinger_cell_matrix(s.energy, s.ell, s.v);
            },
            [this](const AndersonSpec& s) {
                return anderson_matrix(s.energy, s.potential.sample(rng_));
            },
            [this](const IsingChainSpec& s) {
                return ising_transfer_matrix(s.beta, s.coupling, s.field.sample(rng_));
            },
            [](const FibonacciSpec&) { return Matrix2{1.0, 1.0, 1.0, 0.0}; },
            [this](const RandomFibonacciSpec&) {
                return Matrix2{rng_.bernoulli(0.5) ? 1.0 : -1.0, 1.0, 1.0, 0.0};
            },
            [this](const BougerolLacroixSpec& s) {
                if (rng_.bernoulli(s.p)) return Matrix2{s.alpha, 0.0, 0.0, 1.0 / s.alpha};
                return Matrix2{0.0, -1.0, 1.0, 0.0};
            },
            [this](const CohenNewmanSpec& s) {
                return cohen_newman_matrix(s.alpha, s.beta, rng_.uniform(0.0, kTwoPi));
            },
        },
        spec_);
}

std::complex<double> levy_exponent(const FrischLloydSpec& spec, double theta) {
    validate(EnsembleSpec{spec});
    return (spec.coupling.char_fn(theta) - 1.0) / spec.mean_spacing;
}

double density_kummer(double p, double q, double r, double y) {
    if (!(p > 0.0) || !(r > 0.0)) throw ValidationError("density_kummer: requires p > 0 and r > 0");
    if (!(y > 0.0)) return 0.0;
    const double norm = specfun::gamma_fn(p) * specfun::kummer_u(p, 1.0 - q, r);
    return std::pow(y, p - 1.0) * std::pow(1.0 + y, -p - q) * std::exp(-r * y) / norm;
}

double density_gig(double p, double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) throw ValidationError("density_gig: requires a > 0 and b > 0");
    const double pa = std::abs(p);
    if (pa != 0.0 && pa != 1.0) {
        throw ValidationError("density_gig: only |p| in {0, 1} is supported");
    }
    if (!(x > 0.0)) return 0.0;
    const double kp = specfun::bessel_k(static_cast<int>(pa), std::sqrt(a * b));
    const double norm = 2.0 * std::pow(a / b, -p / 2.0) * kp; // K_{-p} = K_p
    return std::pow(x, p - 1.0) * std::exp(-0.5 * (a * x + b / x)) / norm;
}

} // namespace drmt
