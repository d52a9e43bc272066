#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "drmt/ensembles.hpp"
#include "drmt/stats.hpp"

namespace drmt {

/// Positive quantity kept as mantissa * exp(log_scale) so long chains never
/// overflow.
struct LogScaled {
    double mantissa = 1.0;
    double log_scale = 0.0;
    double log_value() const { return std::log(mantissa) + log_scale; }
};

/// Partition function of the field-coupled spin chain by the exact transfer
/// product with per-step renormalization. Periodic boundary takes the trace;
/// the open variant sums over the end spin (used by the brute-force
/// comparison).
LogScaled partition_function(std::span<const double> fields, double beta, double J,
                             bool periodic = true);

/// Exhaustive 2^n enumeration, n <= 24.
double partition_function_bruteforce(std::span<const double> fields, double beta, double J,
                                     bool periodic = true);

struct IsingResult {
    std::uint64_t n = 0;
    double beta = 0.0;
    double coupling = 0.0;
    double free_energy_density = 0.0;
    double stderr_ = 0.0;
    int replicas = 0;
};

/// -(1/(beta n)) ln Z_n averaged over disorder realizations, with the
/// cross-realization standard error (self-averaging makes it shrink like
/// n^{-1/2}).
IsingResult free_energy_density(const IsingChainSpec& spec, std::uint64_t n, int replicas,
                                std::uint64_t seed);

/// Top eigenvalue of the uniform-field transfer matrix.
double ising_top_eigenvalue(double beta, double J, double h);

} // namespace drmt
