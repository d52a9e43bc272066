#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "drmt/ising.hpp"
#include "drmt/lyapunov.hpp"

using namespace drmt;

TEST_CASE("single free spin") {
    const std::vector<double> h{0.0};
    const LogScaled z = partition_function(h, 1.0, 0.0, true);
    CHECK(z.mantissa * std::exp(z.log_scale) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("decoupled chain factorizes into cosh factors") {
    RandomStream rng(1, 0);
    const double beta = 0.9;
    for (int n : {1, 3, 8, 12}) {
        std::vector<double> h(n);
        for (auto& x : h) x = rng.uniform(-2.0, 2.0);
        const LogScaled z = partition_function(h, beta, 0.0, true);
        double ln_expect = 0.0;
        for (double x : h) ln_expect += std::log(2.0 * std::cosh(beta * x));
        CHECK(z.log_value() == doctest::Approx(ln_expect).epsilon(1e-12));
        // and equals the exhaustive enumeration
        CHECK(z.log_value() ==
              doctest::Approx(std::log(partition_function_bruteforce(h, beta, 0.0, true)))
                  .epsilon(1e-12));
    }
}

TEST_CASE("transfer product equals brute force on random fields") {
    RandomStream rng(2, 0);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 2 + static_cast<int>(rng.uniform01() * 11);
        std::vector<double> h(n);
        for (auto& x : h) x = rng.uniform(-1.5, 1.5);
        const double beta = rng.uniform(0.2, 1.2);
        const double J = rng.uniform(-1.0, 1.5);
        for (bool periodic : {true, false}) {
            const LogScaled z = partition_function(h, beta, J, periodic);
            const double zb = partition_function_bruteforce(h, beta, J, periodic);
            CHECK(z.log_value() == doctest::Approx(std::log(zb)).epsilon(1e-10));
        }
    }
}

TEST_CASE("uniform field reaches the top eigenvalue rate") {
    const double beta = 0.8, J = 1.1, h = 0.37;
    std::vector<double> fields(10000, h);
    const LogScaled z = partition_function(fields, beta, J, true);
    const double f = -z.log_value() / (beta * 10000.0);
    const double expect = -std::log(ising_top_eigenvalue(beta, J, h)) / beta;
    CHECK(f == doctest::Approx(expect).epsilon(1e-8));

    // h = 0 closed form: top eigenvalue 2 cosh(beta J)
    std::vector<double> zero(10000, 0.0);
    const LogScaled z0 = partition_function(zero, beta, J, true);
    CHECK(-z0.log_value() / (beta * 10000.0) ==
          doctest::Approx(-std::log(2.0 * std::cosh(beta * J)) / beta).epsilon(1e-8));
}

TEST_CASE("free energy is self averaging") {
    IsingChainSpec spec;
    spec.beta = 1.0;
    spec.coupling = 1.0;
    spec.field = ScalarDist::two_point(1.0, -1.0, 0.5);

    const IsingResult a = free_energy_density(spec, 2000, 400, 11);
    const IsingResult b = free_energy_density(spec, 4000, 400, 12);
    CHECK(a.free_energy_density == doctest::Approx(b.free_energy_density).epsilon(0.01));
    // cross-realization spread shrinks like 1/sqrt(n)
    const double ratio = a.stderr_ / b.stderr_;
    CHECK(ratio > 1.15);
    CHECK(ratio < 1.75);
}

TEST_CASE("free energy equals minus the product growth rate over beta") {
    IsingChainSpec spec;
    spec.beta = 0.7;
    spec.coupling = 0.9;
    spec.field = ScalarDist::two_point(0.8, -0.8, 0.5);

    const IsingResult fe = free_energy_density(spec, 20000, 64, 21);
    const Estimate g = gamma_norm_growth(EnsembleSpec{spec}, 1000000, RandomStream(22, 0));
    const double expect = -g.value / spec.beta;
    const double joint = std::hypot(fe.stderr_, g.stderr_ / spec.beta) + 1e-6;
    CHECK(std::abs(fe.free_energy_density - expect) <= 4.0 * joint);
}

TEST_CASE("trace and norm growth rates agree") {
    // positive transfer entries: the top rate is simple, trace and norm agree
    IsingChainSpec spec;
    spec.beta = 0.6;
    spec.coupling = 1.0;
    spec.field = ScalarDist::uniform(-1.0, 1.0);

    RandomStream rng(31, 0);
    std::vector<double> h(20000);
    for (auto& x : h) x = spec.field.sample(rng);
    const LogScaled z = partition_function(h, spec.beta, spec.coupling, true);
    const double trace_rate = z.log_value() / 20000.0;

    const Estimate g = gamma_norm_growth(EnsembleSpec{spec}, 2000000, RandomStream(31, 1));
    CHECK(trace_rate == doctest::Approx(g.value).epsilon(0.01));
}

TEST_CASE("input contracts") {
    CHECK_THROWS_AS(partition_function({}, 1.0, 1.0, true), ValidationError);
    std::vector<double> too_big(30, 0.0);
    CHECK_THROWS_AS(partition_function_bruteforce(too_big, 1.0, 1.0, true), ValidationError);
}
