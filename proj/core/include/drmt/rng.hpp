#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "drmt/errors.hpp"

namespace drmt {

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace detail

/// Counter-based random stream: the j-th draw of stream i is a pure function
/// of (master seed, i, j), so replicas parallelize without coordination and
/// identical (seed, index) reproduce bit-for-bit.
class RandomStream {
public:
    RandomStream(std::uint64_t master_seed, std::uint64_t stream_index)
        : seed_(master_seed), index_(stream_index) {
        key_ = detail::mix64(detail::mix64(master_seed + detail::kGolden) ^
                             detail::mix64((stream_index + 1) * detail::kGolden));
    }

    std::uint64_t master_seed() const { return seed_; }
    std::uint64_t stream_index() const { return index_; }

    std::uint64_t next_u64() {
        counter_ += detail::kGolden;
        return detail::mix64(key_ + counter_);
    }

    /// Uniform on (0,1), never returning the endpoints.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53 + 0x1.0p-54;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    bool bernoulli(double p) { return uniform01() < p; }

    double exponential(double mean) { return -mean * std::log(uniform01()); }

    /// Two-sided exponential with density (rate/2) exp(-rate |x|).
    double laplace(double rate) {
        const double u = uniform01();
        return (u < 0.5) ? std::log(2.0 * u) / rate : -std::log(2.0 * (1.0 - u)) / rate;
    }

    double normal();

private:
    std::uint64_t seed_;
    std::uint64_t index_;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

namespace detail {

/// 128-layer ziggurat for the standard normal. Layer i covers the rectangle
/// [0, xs[i]] x [fs[i], fs[i+1]]; layer 0 is the base strip plus the tail
/// beyond kR. All layers have equal area kV.
struct NormalZiggurat {
    static constexpr int kLayers = 128;
    static constexpr double kR = 3.442619855899;
    static constexpr double kV = 9.91256303526217e-3;
    std::array<double, kLayers + 1> xs{};
    std::array<double, kLayers + 1> fs{};

    NormalZiggurat() {
        auto f = [](double t) { return std::exp(-0.5 * t * t); };
        xs[1] = kR;
        fs[1] = f(kR);
        xs[0] = kV / fs[1];
        fs[0] = f(xs[0]);
        for (int i = 1; i < kLayers; ++i) {
            const double ynext = fs[i] + kV / xs[i];
            xs[i + 1] = (ynext >= 1.0) ? 0.0 : std::sqrt(-2.0 * std::log(ynext));
            fs[i + 1] = ynext;
        }
        xs[kLayers] = 0.0;
        fs[kLayers] = 1.0;
    }
};

inline const NormalZiggurat& ziggurat() {
    static const NormalZiggurat z;
    return z;
}

} // namespace detail

inline double RandomStream::normal() {
    const auto& zg = detail::ziggurat();
    for (;;) {
        const std::uint64_t u = next_u64();
        const int i = static_cast<int>(u & 127u);
        const bool neg = (u >> 8) & 1u;
        const double uu = static_cast<double>(u >> 11) * 0x1.0p-53;
        const double x = uu * zg.xs[i];
        if (x < zg.xs[i + 1]) return neg ? -x : x;
        if (i == 0) {
            // tail sample beyond kR
            double xx, yy;
            do {
                xx = -std::log(uniform01()) / detail::NormalZiggurat::kR;
                yy = -std::log(uniform01());
            } while (yy + yy < xx * xx);
            const double t = detail::NormalZiggurat::kR + xx;
            return neg ? -t : t;
        }
        if (zg.fs[i] + uniform01() * (zg.fs[i + 1] - zg.fs[i]) < std::exp(-0.5 * x * x)) {
            return neg ? -x : x;
        }
    }
}

/// Gamma(shape, scale) sampler: Marsaglia-Tsang cubic-of-normal rejection
/// for shape >= 1, with the U^{1/shape} boost for shape < 1.
inline double sample_gamma(double shape, double scale, RandomStream& rng) {
    if (!(shape > 0.0) || !(scale > 0.0)) {
        throw ValidationError("sample_gamma: shape and scale must be positive");
    }
    double boost = 1.0;
    double a = shape;
    if (a < 1.0) {
        boost = std::pow(rng.uniform01(), 1.0 / a);
        a += 1.0;
    }
    const double d = a - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double z, v;
        do {
            z = rng.normal();
            v = 1.0 + c * z;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform01();
        if (u < 1.0 - 0.0331 * z * z * z * z) return boost * scale * d * v;
        if (std::log(u) < 0.5 * z * z + d * (1.0 - v + std::log(v))) return boost * scale * d * v;
    }
}

} // namespace drmt
