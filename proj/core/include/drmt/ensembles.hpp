#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>

#include "drmt/distributions.hpp"
#include "drmt/matrix2.hpp"
#include "drmt/rng.hpp"

namespace drmt {

// ---- ensemble parameter records ----

/// Point-mass string: cells are a mass kick followed by a free spacing.
struct DysonStringSpec {
    ScalarDist mass = ScalarDist::exponential(1.0);
    ScalarDist spacing = ScalarDist::exponential(1.0);
    double lambda = -1.0;
};

/// String whose masses and spacings are ratio-coupled through one iid
/// positive sequence c_j ~ Gamma(p, q).
struct DysonTypeISpec {
    double p = 1.0;
    double q = 1.0;
    double lambda = -1.0;
};

/// Delta impurities on the line at energy E; k = sqrt(|E|).
struct FrischLloydSpec {
    ScalarDist coupling = ScalarDist::constant(1.0);
    double mean_spacing = 1.0;
    double energy = 1.0;
};

/// Periodic delta array (deterministic Frisch-Lloyd).
struct KronigPenneySpec {
    double v = 1.0;
    double ell = 1.0;
    double energy = 1.0;
};

struct AndersonSpec {
    ScalarDist potential = ScalarDist::uniform(-1.0, 1.0);
    double energy = 0.0;
};

struct IsingChainSpec {
    double beta = 1.0;
    double coupling = 1.0; // J
    ScalarDist field = ScalarDist::two_point(1.0, -1.0, 0.5);
};

struct FibonacciSpec {};

struct RandomFibonacciSpec {};

struct BougerolLacroixSpec {
    double alpha = 2.0;
    double p = 0.5;
};

struct CohenNewmanSpec {
    double alpha = 2.0;
    double beta = 0.0;
};

using EnsembleSpec =
    std::variant<DysonStringSpec, DysonTypeISpec, FrischLloydSpec, KronigPenneySpec, AndersonSpec,
                 IsingChainSpec, FibonacciSpec, RandomFibonacciSpec, BougerolLacroixSpec,
                 CohenNewmanSpec>;

/// Throws ValidationError on nonpositive scales or malformed parameters.
void validate(const EnsembleSpec& spec);
std::string model_tag(const EnsembleSpec& spec);
bool is_impurity_model(const EnsembleSpec& spec);
/// Spectral parameter of an impurity-model spec (lambda or E).
double spectral_parameter(const EnsembleSpec& spec);
EnsembleSpec with_spectral_parameter(EnsembleSpec spec, double lambda);

// ---- cell matrices (one impurity kick followed by one free spacing) ----

/// String cell: [[1,0],[ell,1]] * [[1,-lambda m],[0,1]].
Matrix2 dyson_cell_matrix(double lambda, double ell, double mass);
/// Schroedinger cell at energy E: free propagator over ell times [[1,v],[0,1]].
Matrix2 schroedinger_cell_matrix(double energy, double ell, double v);
/// Free propagator over a spacing (no kick).
Matrix2 schroedinger_free_matrix(double energy, double ell);
Matrix2 dyson_free_matrix(double ell);
Matrix2 anderson_matrix(double energy, double site_potential);
Matrix2 ising_transfer_matrix(double beta, double J, double h);
Matrix2 cohen_newman_matrix(double alpha, double beta, double theta);

/// One jump cell of an impurity model: kick of weight w at the left end,
/// then a free spacing ell.
struct Cell {
    double w = 0.0;
    double ell = 1.0;
};

/// Sequential sampler; per-draw matrices follow the model's cell layout.
/// Type-I strings carry state (masses and spacings are dependent), so draws
/// must be taken in order.
class MatrixSampler {
public:
    MatrixSampler(const EnsembleSpec& spec, RandomStream rng);

    Matrix2 next();
    /// Impurity models only.
    Cell next_cell();
    /// Draw for the leading free spacing before the first impurity.
    double initial_spacing();

    const EnsembleSpec& spec() const { return spec_; }

private:
    EnsembleSpec spec_;
    RandomStream rng_;
    // Type-I recursion state
    bool typei_started_ = false;
    double typei_prev_ell_ = 0.0;
    std::uint64_t typei_index_ = 0;
};

/// Levy exponent of the compound-Poisson potential of a Frisch-Lloyd spec:
/// (E e^{i theta v} - 1) / ell.
std::complex<double> levy_exponent(const FrischLloydSpec& spec, double theta);

/// Kummer(p, q, r) density with the Gamma(p) Psi(p, 1-q; r) normalizer.
double density_kummer(double p, double q, double r, double y);
/// Generalized inverse Gaussian density; |p| must be 0 or 1 (the orders with
/// a modified-Bessel normalizer available here).
double density_gig(double p, double a, double b, double x);

} // namespace drmt
