#include "drmt/stats.hpp"

#include <algorithm>
#include <cmath>

#include "drmt/specfun.hpp"

namespace drmt {

void BatchMeans::add(double y) {
    ++n_;
    // compensated grand total
    const double t = total_ + y;
    if (std::abs(total_) >= std::abs(y)) {
        total_comp_ += (total_ - t) + y;
    } else {
        total_comp_ += (y - t) + total_;
    }
    total_ = t;

    cur_ += y;
    if (++cur_n_ == batch_len_) {
        sums_.push_back(cur_);
        cur_ = 0.0;
        cur_n_ = 0;
        if (sums_.size() == 64) {
            for (std::size_t i = 0; i < 32; ++i) sums_[i] = sums_[2 * i] + sums_[2 * i + 1];
            sums_.resize(32);
            batch_len_ *= 2;
        }
    }
}

double BatchMeans::mean() const {
    if (n_ == 0) return 0.0;
    return (total_ + total_comp_) / static_cast<double>(n_);
}

double BatchMeans::stderr_of_mean() const {
    const std::size_t m = sums_.size();
    if (m < 2) return 0.0;
    const double len = static_cast<double>(batch_len_);
    double mb = 0.0;
    for (double s : sums_) mb += s / len;
    mb /= static_cast<double>(m);
    double var = 0.0;
    for (double s : sums_) {
        const double d = s / len - mb;
        var += d * d;
    }
    var /= static_cast<double>(m - 1);
    // variance of the grand mean from m batch means
    return std::sqrt(var / static_cast<double>(m));
}

MeanStderr mean_stderr(const std::vector<double>& xs) {
    MeanStderr r;
    r.n = xs.size();
    if (xs.empty()) return r;
    double m = 0.0;
    for (double x : xs) m += x;
    m /= static_cast<double>(xs.size());
    double v = 0.0;
    for (double x : xs) v += (x - m) * (x - m);
    r.mean = m;
    r.stderr_ = xs.size() > 1
                    ? std::sqrt(v / (static_cast<double>(xs.size() - 1) * static_cast<double>(xs.size())))
                    : 0.0;
    return r;
}

double reg_lower_inc_gamma(double s, double x) {
    if (!(s > 0.0) || x < 0.0) throw ValidationError("reg_lower_inc_gamma: bad arguments");
    if (x == 0.0) return 0.0;
    const double lg = specfun::ln_gamma(s);
    if (x < s + 1.0) {
        // series
        double term = 1.0 / s;
        double sum = term;
        for (int k = 1; k < 10000; ++k) {
            term *= x / (s + k);
            sum += term;
            if (std::abs(term) < std::abs(sum) * 1e-16) break;
        }
        return sum * std::exp(-x + s * std::log(x) - lg);
    }
    // continued fraction for Q(s,x) (Lentz)
    double b = x + 1.0 - s;
    double c = 1e308;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::abs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    const double q = std::exp(-x + s * std::log(x) - lg) * h;
    return 1.0 - q;
}

double chi2_cdf(double x, double dof) { return reg_lower_inc_gamma(dof / 2.0, x / 2.0); }

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
    std::sort(samples.begin(), samples.end());
    const auto n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
    }
    return d;
}

namespace {
double kolmogorov_q(double t) {
    if (t < 0.2) return 1.0;
    double sum = 0.0;
    for (int j = 1; j <= 100; ++j) {
        const double term = std::exp(-2.0 * j * j * t * t);
        sum += (j % 2 == 1 ? term : -term);
        if (term < 1e-18) break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}
} // namespace

double ks_pvalue(double d, std::size_t n) {
    const double sn = std::sqrt(static_cast<double>(n));
    return kolmogorov_q((sn + 0.12 + 0.11 / sn) * d);
}

double ks2_pvalue(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double xa = a[i], xb = b[j];
        if (xa <= xb) ++i;
        if (xb <= xa) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    const double ne = std::sqrt(na * nb / (na + nb));
    return kolmogorov_q((ne + 0.12 + 0.11 / ne) * d);
}

GofResult ks_test(std::vector<double> samples, const std::function<double(double)>& cdf) {
    GofResult r;
    const std::size_t n = samples.size();
    r.stat = ks_statistic(std::move(samples), cdf);
    r.dof = static_cast<double>(n);
    r.pvalue = ks_pvalue(r.stat, n);
    return r;
}

GofResult chi2_test(const std::vector<double>& observed, const std::vector<double>& expected,
                    double min_expected, int fitted_params) {
    if (observed.size() != expected.size() || observed.empty()) {
        throw ValidationError("chi2_test: size mismatch");
    }
    // pool adjacent bins until every pooled bin has expected >= min_expected
    std::vector<double> obs, exp;
    double o = 0.0, e = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        o += observed[i];
        e += expected[i];
        if (e >= min_expected) {
            obs.push_back(o);
            exp.push_back(e);
            o = e = 0.0;
        }
    }
    if (e > 0.0 || o > 0.0) {
        if (!exp.empty()) {
            obs.back() += o;
            exp.back() += e;
        } else {
            obs.push_back(o);
            exp.push_back(e);
        }
    }
    GofResult r;
    if (exp.size() < 2) {
        r.pvalue = 1.0;
        return r;
    }
    double stat = 0.0;
    for (std::size_t i = 0; i < exp.size(); ++i) {
        const double d = obs[i] - exp[i];
        stat += d * d / exp[i];
    }
    const double dof = static_cast<double>(exp.size()) - 1.0 - fitted_params;
    r.stat = stat;
    r.dof = std::max(1.0, dof);
    r.pvalue = 1.0 - chi2_cdf(stat, r.dof);
    return r;
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw ValidationError("fit_line: need >= 2 points");
    const auto n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
        syy += y[i] * y[i];
    }
    LineFit f;
    const double den = n * sxx - sx * sx;
    f.slope = (n * sxy - sx * sy) / den;
    f.intercept = (sy - f.slope * sx) / n;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (f.slope * x[i] + f.intercept);
        ss_res += r * r;
    }
    const double ss_tot = syy - sy * sy / n;
    f.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return f;
}

} // namespace drmt
