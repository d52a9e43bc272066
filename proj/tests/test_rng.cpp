#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "drmt/rng.hpp"
#include "drmt/stats.hpp"

using namespace drmt;

TEST_CASE("streams reproduce bit-for-bit") {
    RandomStream a(42, 3), b(42, 3);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
    RandomStream c(42, 4);
    bool differs = false;
    RandomStream a2(42, 3);
    for (int i = 0; i < 64; ++i) differs |= (a2.next_u64() != c.next_u64());
    CHECK(differs);
}

TEST_CASE("uniform01 stays inside the open interval") {
    RandomStream rng(1, 0);
    for (int i = 0; i < 200000; ++i) {
        const double u = rng.uniform01();
        CHECK(u > 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("normal moments") {
    RandomStream rng(5, 0);
    const int n = 2000000;
    double s = 0, s2 = 0, s4 = 0;
    for (int i = 0; i < n; ++i) {
        const double x = rng.normal();
        s += x;
        s2 += x * x;
        s4 += x * x * x * x;
    }
    CHECK(std::abs(s / n) < 4.0 / std::sqrt(double(n)));
    CHECK(s2 / n == doctest::Approx(1.0).epsilon(5e-3));
    CHECK(s4 / n == doctest::Approx(3.0).epsilon(2e-2));
}

TEST_CASE("gamma sampler matches the first two moments") {
    for (double shape : {0.4, 1.0, 2.5, 7.0}) {
        const double scale = 1.3;
        RandomStream rng(9, 17);
        const int n = 1000000;
        double s = 0, s2 = 0;
        for (int i = 0; i < n; ++i) {
            const double x = sample_gamma(shape, scale, rng);
            s += x;
            s2 += x * x;
        }
        const double mean = s / n;
        const double var = s2 / n - mean * mean;
        const double mean_se = std::sqrt(shape) * scale / std::sqrt(double(n));
        CHECK(std::abs(mean - shape * scale) < 4.0 * mean_se);
        // variance of the variance estimate ~ (kurtosis) var^2 / n
        const double var_se = std::sqrt((3.0 + 6.0 / shape)) * shape * scale * scale /
                              std::sqrt(double(n));
        CHECK(std::abs(var - shape * scale * scale) < 5.0 * var_se);
    }
}

TEST_CASE("gamma with shape 1 is exponential") {
    RandomStream rng(12, 2);
    const double q = 0.7;
    std::vector<double> xs(20000);
    for (auto& x : xs) x = sample_gamma(1.0, q, rng);
    auto cdf = [q](double x) { return x <= 0.0 ? 0.0 : 1.0 - std::exp(-x / q); };
    const GofResult r = ks_test(xs, cdf);
    CHECK(r.pass(0.01));
}

TEST_CASE("rejected parameters") {
    RandomStream rng(1, 1);
    CHECK_THROWS_AS(sample_gamma(-1.0, 1.0, rng), ValidationError);
    CHECK_THROWS_AS(sample_gamma(1.0, 0.0, rng), ValidationError);
}

TEST_CASE("batch means recovers iid stderr") {
    RandomStream rng(77, 0);
    BatchMeans bm(16);
    const int n = 1 << 18;
    for (int i = 0; i < n; ++i) bm.add(rng.normal());
    CHECK(bm.batches() >= 32);
    const double expect = 1.0 / std::sqrt(double(n));
    CHECK(bm.stderr_of_mean() == doctest::Approx(expect).epsilon(0.4));
    CHECK(std::abs(bm.mean()) < 5.0 * expect);
}
