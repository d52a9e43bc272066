#pragma once

#include <functional>

namespace drmt::quad {

struct Result {
    double value = 0.0;
    double abs_err = 0.0;
    int evals = 0;
    bool converged = true;
};

/// Adaptive Gauss-Kronrod 7-15 on a finite interval.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10, double rel_tol = 1e-8, int max_depth = 48);

/// Integral over [a, inf), exp-substitution on the unbounded part.
Result integrate_to_inf(const std::function<double(double)>& f, double a,
                        double abs_tol = 1e-10, double rel_tol = 1e-8);

/// Integral over (-inf, inf).
Result integrate_real_line(const std::function<double(double)>& f,
                           double abs_tol = 1e-10, double rel_tol = 1e-8);

} // namespace drmt::quad
