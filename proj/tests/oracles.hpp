#pragma once

// Test-only reference computations, kept independent of the library paths
// they are used to check.

#include <cmath>

#include "oqho/linalg.hpp"
#include "oqho/matrix.hpp"

namespace oqho::test {

// Horner-evaluated truncated Taylor series of e^A.
inline RealMatrix expm_taylor(const RealMatrix& a, int order) {
    const std::size_t n = a.rows();
    RealMatrix acc = RealMatrix::identity(n);
    for (int k = order; k >= 1; --k) {
        acc = RealMatrix::identity(n) + (1.0 / static_cast<double>(k)) * (a * acc);
    }
    return acc;
}

namespace detail {
inline RealMatrix lyap_integrand(const RealMatrix& a, const RealMatrix& at, const RealMatrix& q,
                                 double t) {
    const RealMatrix e = linalg::expm(t * a);
    return e * q * linalg::expm(t * at);
}

inline RealMatrix simpson(const RealMatrix& a, const RealMatrix& at, const RealMatrix& q,
                          double lo, double hi, int panels) {
    const double h = (hi - lo) / panels;
    RealMatrix sum = lyap_integrand(a, at, q, lo) + lyap_integrand(a, at, q, hi);
    for (int i = 1; i < panels; ++i)
        sum += (i % 2 == 1 ? 4.0 : 2.0) * lyap_integrand(a, at, q, lo + i * h);
    return (h / 3.0) * sum;
}
}  // namespace detail

// integral of e^{tA} Q e^{tA^T} over [0, inf): horizon chosen where the
// integrand norm drops below 1e-12, then panel-doubling Simpson until the
// result stabilises.
inline RealMatrix lyapunov_integral(const RealMatrix& a, const RealMatrix& q) {
    const RealMatrix at = a.transpose();
    double horizon = 1.0;
    for (int i = 0; i < 60; ++i) {
        if (frobenius_norm(detail::lyap_integrand(a, at, q, horizon)) < 1e-12) break;
        horizon *= 2.0;
    }
    int panels = 64;
    RealMatrix prev = detail::simpson(a, at, q, 0.0, horizon, panels);
    for (int round = 0; round < 12; ++round) {
        panels *= 2;
        RealMatrix next = detail::simpson(a, at, q, 0.0, horizon, panels);
        if (frobenius_norm(next - prev) < 1e-10 * std::max(1.0, frobenius_norm(next)))
            return next;
        prev = next;
    }
    return prev;
}

}  // namespace oqho::test
