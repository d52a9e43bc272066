#pragma once

#include <complex>
#include <string>

#include "drmt/rng.hpp"

namespace drmt {

/// Scalar distribution used for masses, spacings, couplings and fields.
struct ScalarDist {
    enum class Kind { Constant, Exponential, Gamma, Laplace, Uniform, TwoPoint };

    Kind kind = Kind::Constant;
    double p1 = 0.0; // Constant: value; Exponential: mean; Gamma: shape;
                     // Laplace: rate; Uniform: a; TwoPoint: x1
    double p2 = 0.0; // Gamma: scale; Uniform: b; TwoPoint: x2
    double p3 = 0.0; // TwoPoint: P(x1)

    static ScalarDist constant(double v) { return {Kind::Constant, v, 0, 0}; }
    static ScalarDist exponential(double mean) { return {Kind::Exponential, mean, 0, 0}; }
    static ScalarDist gamma(double shape, double scale) { return {Kind::Gamma, shape, scale, 0}; }
    static ScalarDist laplace(double rate) { return {Kind::Laplace, rate, 0, 0}; }
    static ScalarDist uniform(double a, double b) { return {Kind::Uniform, a, b, 0}; }
    static ScalarDist two_point(double x1, double x2, double p) { return {Kind::TwoPoint, x1, x2, p}; }

    double sample(RandomStream& rng) const;
    double mean() const;
    double variance() const;
    /// E[e^{i theta X}].
    std::complex<double> char_fn(double theta) const;
    /// Strictly positive support (needed for spacings and string masses).
    bool strictly_positive() const;
    void validate(const std::string& role) const;

    std::string name() const;
};

} // namespace drmt
