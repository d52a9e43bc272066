#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "drmt/errors.hpp"

namespace drmt {

/// Binned empirical density on a real interval with tail-mass bookkeeping.
/// The in-range density integrates to (n - tails) / n.
class HistogramDensity {
public:
    HistogramDensity() = default;
    HistogramDensity(double lo, double hi, std::size_t nbins);

    void add(double x);

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    std::size_t bins() const { return counts_.size(); }
    double bin_left(std::size_t i) const { return lo_ + width_ * static_cast<double>(i); }
    double bin_right(std::size_t i) const { return lo_ + width_ * static_cast<double>(i + 1); }
    double bin_center(std::size_t i) const { return lo_ + width_ * (static_cast<double>(i) + 0.5); }
    double bin_width() const { return width_; }
    std::uint64_t count(std::size_t i) const { return counts_[i]; }
    std::uint64_t total() const { return n_; }
    std::uint64_t below() const { return below_; }
    std::uint64_t above() const { return above_; }
    double tail_fraction() const {
        return n_ ? static_cast<double>(below_ + above_) / static_cast<double>(n_) : 0.0;
    }

    /// Normalized density estimate at bin i (counts / (n * width)).
    double density(std::size_t i) const;

    /// P(X <= x) from the empirical measure, counting the below-range tail;
    /// piecewise linear within bins.
    double cdf(double x) const;

    /// In-range mass (integral of the binned density).
    double mass_in_range() const;

    /// CSV rows: bin_left, bin_right, count, density.
    void write_csv(std::ostream& os) const;

private:
    double lo_ = 0.0, hi_ = 1.0, width_ = 1.0;
    std::vector<std::uint64_t> counts_;
    std::uint64_t n_ = 0;
    std::uint64_t below_ = 0;
    std::uint64_t above_ = 0;
};

} // namespace drmt
