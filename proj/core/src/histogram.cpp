#include "drmt/histogram.hpp"

#include <cmath>
#include <ostream>

namespace drmt {

HistogramDensity::HistogramDensity(double lo, double hi, std::size_t nbins)
    : lo_(lo), hi_(hi), counts_(nbins, 0) {
    if (!(hi > lo) || nbins == 0) throw ValidationError("HistogramDensity: bad range or bin count");
    width_ = (hi - lo) / static_cast<double>(nbins);
}

void HistogramDensity::add(double x) {
    ++n_;
    if (!(x >= lo_)) {
        ++below_; // NaN lands here too; callers screen non-finite samples
        return;
    }
    if (x >= hi_) {
        ++above_;
        return;
    }
    auto i = static_cast<std::size_t>((x - lo_) / width_);
    if (i >= counts_.size()) i = counts_.size() - 1;
    ++counts_[i];
}

double HistogramDensity::density(std::size_t i) const {
    if (n_ == 0) return 0.0;
    return static_cast<double>(counts_[i]) / (static_cast<double>(n_) * width_);
}

double HistogramDensity::cdf(double x) const {
    if (n_ == 0) return 0.0;
    if (x < lo_) return static_cast<double>(below_) / static_cast<double>(n_);
    double acc = static_cast<double>(below_);
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (x >= bin_right(i)) {
            acc += static_cast<double>(counts_[i]);
        } else {
            acc += static_cast<double>(counts_[i]) * (x - bin_left(i)) / width_;
            return acc / static_cast<double>(n_);
        }
    }
    return acc / static_cast<double>(n_);
}

double HistogramDensity::mass_in_range() const {
    if (n_ == 0) return 0.0;
    std::uint64_t in = 0;
    for (auto c : counts_) in += c;
    return static_cast<double>(in) / static_cast<double>(n_);
}

void HistogramDensity::write_csv(std::ostream& os) const {
    os << "bin_left,bin_right,count,density\n";
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        os << bin_left(i) << ',' << bin_right(i) << ',' << counts_[i] << ',' << density(i) << '\n';
    }
}

} // namespace drmt
