#include "drmt/distributions.hpp"

#include <cmath>

namespace drmt {

double ScalarDist::sample(RandomStream& rng) const {
    switch (kind) {
        case Kind::Constant: return p1;
        case Kind::Exponential: return rng.exponential(p1);
        case Kind::Gamma: return sample_gamma(p1, p2, rng);
        case Kind::Laplace: return rng.laplace(p1);
        case Kind::Uniform: return rng.uniform(p1, p2);
        case Kind::TwoPoint: return rng.bernoulli(p3) ? p1 : p2;
    }
    throw ValidationError("ScalarDist: unknown kind");
}

double ScalarDist::mean() const {
    switch (kind) {
        case Kind::Constant: return p1;
        case Kind::Exponential: return p1;
        case Kind::Gamma: return p1 * p2;
        case Kind::Laplace: return 0.0;
        case Kind::Uniform: return 0.5 * (p1 + p2);
        case Kind::TwoPoint: return p3 * p1 + (1.0 - p3) * p2;
    }
    throw ValidationError("ScalarDist: unknown kind");
}

double ScalarDist::variance() const {
    switch (kind) {
        case Kind::Constant: return 0.0;
        case Kind::Exponential: return p1 * p1;
        case Kind::Gamma: return p1 * p2 * p2;
        case Kind::Laplace: return 2.0 / (p1 * p1);
        case Kind::Uniform: {
            const double w = p2 - p1;
            return w * w / 12.0;
        }
        case Kind::TwoPoint: {
            const double m = mean();
            return p3 * (p1 - m) * (p1 - m) + (1.0 - p3) * (p2 - m) * (p2 - m);
        }
    }
    throw ValidationError("ScalarDist: unknown kind");
}

std::complex<double> ScalarDist::char_fn(double theta) const {
    const std::complex<double> i(0.0, 1.0);
    switch (kind) {
        case Kind::Constant: return std::exp(i * theta * p1);
        case Kind::Exponential: return 1.0 / (1.0 - i * theta * p1);
        case Kind::Gamma: return std::pow(1.0 - i * theta * p2, -p1);
        case Kind::Laplace: return {p1 * p1 / (p1 * p1 + theta * theta), 0.0};
        case Kind::Uniform: {
            if (theta == 0.0) return {1.0, 0.0};
            return (std::exp(i * theta * p2) - std::exp(i * theta * p1)) / (i * theta * (p2 - p1));
        }
        case Kind::TwoPoint: return p3 * std::exp(i * theta * p1) + (1.0 - p3) * std::exp(i * theta * p2);
    }
    throw ValidationError("ScalarDist: unknown kind");
}

bool ScalarDist::strictly_positive() const {
    switch (kind) {
        case Kind::Constant: return p1 > 0.0;
        case Kind::Exponential: return p1 > 0.0;
        case Kind::Gamma: return true;
        case Kind::Laplace: return false;
        case Kind::Uniform: return p1 > 0.0;
        case Kind::TwoPoint: return p1 > 0.0 && p2 > 0.0;
    }
    return false;
}

void ScalarDist::validate(const std::string& role) const {
    auto fail = [&role](const std::string& msg) {
        throw ValidationError("distribution for " + role + ": " + msg);
    };
    switch (kind) {
        case Kind::Constant:
            if (!std::isfinite(p1)) fail("value must be finite");
            break;
        case Kind::Exponential:
            if (!(p1 > 0.0)) fail("mean must be positive");
            break;
        case Kind::Gamma:
            if (!(p1 > 0.0) || !(p2 > 0.0)) fail("shape and scale must be positive");
            break;
        case Kind::Laplace:
            if (!(p1 > 0.0)) fail("rate must be positive");
            break;
        case Kind::Uniform:
            if (!(p2 > p1)) fail("needs a < b");
            break;
        case Kind::TwoPoint:
            if (!(p3 >= 0.0 && p3 <= 1.0)) fail("probability must lie in [0,1]");
            break;
    }
}

std::string ScalarDist::name() const {
    switch (kind) {
        case Kind::Constant: return "constant";
        case Kind::Exponential: return "exponential";
        case Kind::Gamma: return "gamma";
        case Kind::Laplace: return "laplace";
        case Kind::Uniform: return "uniform";
        case Kind::TwoPoint: return "two-point";
    }
    return "?";
}

} // namespace drmt
