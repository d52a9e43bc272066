#include "drmt/ising.hpp"

#include <cmath>

#include "drmt/parallel.hpp"

namespace drmt {

LogScaled partition_function(std::span<const double> fields, double beta, double J,
                             bool periodic) {
    if (fields.empty()) throw ValidationError("partition_function: need at least one spin");
    LogScaled z;
    if (periodic) {
        Matrix2 p = Matrix2::identity();
        double logscale = 0.0;
        for (double h : fields) {
            p = compose(ising_transfer_matrix(beta, J, h), p);
            const double s = p.frobenius();
            p = p.scaled(1.0 / s);
            logscale += std::log(s);
        }
        z.mantissa = p.a + p.d;
        z.log_scale = logscale;
        return z;
    }
    // open chain: start from the single-spin vector, apply transfers 2..n,
    // then sum over the last spin
    double vp = std::exp(beta * fields[0]);
    double vm = std::exp(-beta * fields[0]);
    double logscale = 0.0;
    for (std::size_t j = 1; j < fields.size(); ++j) {
        const Matrix2 a = ising_transfer_matrix(beta, J, fields[j]);
        const double np = a.a * vp + a.b * vm;
        const double nm = a.c * vp + a.d * vm;
        const double s = std::hypot(np, nm);
        vp = np / s;
        vm = nm / s;
        logscale += std::log(s);
    }
    z.mantissa = vp + vm;
    z.log_scale = logscale;
    return z;
}

double partition_function_bruteforce(std::span<const double> fields, double beta, double J,
                                     bool periodic) {
    const std::size_t n = fields.size();
    if (n == 0 || n > 24) throw ValidationError("partition_function_bruteforce: 1 <= n <= 24");
    double z = 0.0;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        auto spin = [&](std::size_t j) { return (mask >> j) & 1ull ? 1.0 : -1.0; };
        double h_energy = 0.0;
        for (std::size_t j = 0; j < n; ++j) h_energy += fields[j] * spin(j);
        double j_energy = 0.0;
        for (std::size_t j = 0; j + 1 < n; ++j) j_energy += spin(j) * spin(j + 1);
        if (periodic && n > 1) j_energy += spin(n - 1) * spin(0);
        z += std::exp(beta * (J * j_energy + h_energy));
    }
    return z;
}

IsingResult free_energy_density(const IsingChainSpec& spec, std::uint64_t n, int replicas,
                                std::uint64_t seed) {
    validate(EnsembleSpec{spec});
    if (n < 1 || replicas < 2) throw ValidationError("free_energy_density: need n >= 1, replicas >= 2");
    std::vector<double> vals(static_cast<std::size_t>(replicas));
    parallel_for(replicas, [&](int r) {
        RandomStream rng(seed, static_cast<std::uint64_t>(r));
        std::vector<double> fields(n);
        for (auto& h : fields) h = spec.field.sample(rng);
        const LogScaled z = partition_function(fields, spec.beta, spec.coupling, true);
        vals[static_cast<std::size_t>(r)] =
            -z.log_value() / (spec.beta * static_cast<double>(n));
    });
    const MeanStderr ms = mean_stderr(vals);
    IsingResult out;
    out.n = n;
    out.beta = spec.beta;
    out.coupling = spec.coupling;
    out.free_energy_density = ms.mean;
    out.stderr_ = ms.stderr_;
    out.replicas = replicas;
    return out;
}

double ising_top_eigenvalue(double beta, double J, double h) {
    const double ebj = std::exp(beta * J);
    const double disc = std::sqrt(ebj * ebj * std::sinh(beta * h) * std::sinh(beta * h) +
                                  std::exp(-2.0 * beta * J));
    return ebj * std::cosh(beta * h) + disc;
}

} // namespace drmt
