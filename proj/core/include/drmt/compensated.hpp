#pragma once

#include <cmath>

namespace drmt {

/// Neumaier compensated accumulator for long sums of logs.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }
    void reset() { sum_ = comp_ = 0.0; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace drmt
