#pragma once

// Slow, independent series evaluators in double-double arithmetic; the source
// of the frozen golden values. Everything here is Maclaurin-series based (or
// an exact elementary identity) and shares no code path with drmt::specfun.

#include "dd.hpp"

namespace golden {

struct Airy4 {
    dd::DD ai, bi, aip, bip;
};
/// Valid for |x| <= ~14 (cancellation stays within dd headroom).
Airy4 airy_series(double x);

struct J1Y1 {
    dd::DD j1, y1;
};
/// Valid for 0 < x <= ~22.
J1Y1 bessel_j1y1_series(double x);

/// n in {0, 1}, 0 < x <= ~20.
dd::DD bessel_k_series(int n, double x);

/// E1 by alternating series, 0 < x <= ~6.
dd::DD expint_e1_series(double x);

/// erfc by the erf Maclaurin series, 0 < x <= ~3.5.
dd::DD erfc_series(double x);

dd::DD ln_gamma(double x);

} // namespace golden
