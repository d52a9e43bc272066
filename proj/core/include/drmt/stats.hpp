#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "drmt/errors.hpp"

namespace drmt {

/// A Monte-Carlo result with its provenance.
struct Estimate {
    double value = 0.0;
    double stderr_ = 0.0;
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    std::string model;
};

/// Streaming batch-means standard error for correlated sequences. Keeps at
/// most 64 batches, merging pairs and doubling the batch length when full, so
/// the final count is in [32, 64) once enough data has been seen.
class BatchMeans {
public:
    explicit BatchMeans(std::uint64_t initial_batch = 1) : batch_len_(initial_batch ? initial_batch : 1) {}

    void add(double y);

    std::uint64_t count() const { return n_; }
    double mean() const;
    /// Standard error of the mean from completed batches; 0 when fewer than
    /// two batches are available.
    double stderr_of_mean() const;
    std::size_t batches() const { return sums_.size(); }

private:
    std::vector<double> sums_;
    double cur_ = 0.0;
    std::uint64_t cur_n_ = 0;
    std::uint64_t batch_len_;
    std::uint64_t n_ = 0;
    double total_ = 0.0, total_comp_ = 0.0;
};

struct MeanStderr {
    double mean = 0.0;
    double stderr_ = 0.0;
    std::size_t n = 0;
};
MeanStderr mean_stderr(const std::vector<double>& xs);

// --- special-function helpers for the statistical tests ---

/// Regularized lower incomplete gamma P(s, x).
double reg_lower_inc_gamma(double s, double x);
double chi2_cdf(double x, double dof);

// --- Kolmogorov-Smirnov ---

/// One-sample KS statistic against a CDF; samples need not be sorted.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);
/// Asymptotic KS p-value with the finite-n correction.
double ks_pvalue(double d, std::size_t n);
/// Two-sample KS p-value.
double ks2_pvalue(std::vector<double> a, std::vector<double> b);

struct GofResult {
    double stat = 0.0;
    double dof = 0.0;
    double pvalue = 1.0;
    bool pass(double level = 0.01) const { return pvalue >= level; }
};

/// One-sample KS test at the given level.
GofResult ks_test(std::vector<double> samples, const std::function<double(double)>& cdf);

/// Pearson chi-square goodness of fit. Bins with expected count below
/// `min_expected` are pooled into their neighbor. `fitted_params` reduces the
/// degrees of freedom.
GofResult chi2_test(const std::vector<double>& observed, const std::vector<double>& expected,
                    double min_expected = 5.0, int fitted_params = 0);

/// Least-squares line fit y = slope x + intercept with coefficient of
/// determination.
struct LineFit {
    double slope = 0.0, intercept = 0.0, r2 = 0.0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

} // namespace drmt
