#pragma once

#include <cmath>
#include <concepts>

namespace bernstein {

/// Adaptive Simpson quadrature: interval halving with the classic
/// embedded |S2 - S1|/15 error estimate, absolute tolerance per panel.
template <std::invocable<double> F>
double adaptive_simpson(F&& f, double a, double b, double abs_tol = 1e-9,
                        int max_depth = 40) {
    struct Impl {
        const F& f;
        double recurse(double a, double b, double fa, double fm, double fb,
                       double whole, double tol, int depth) const {
            const double m = 0.5 * (a + b);
            const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
            const double flm = f(lm), frm = f(rm);
            const double h = b - a;
            const double left = (h / 12.0) * (fa + 4.0 * flm + fm);
            const double right = (h / 12.0) * (fm + 4.0 * frm + fb);
            const double s2 = left + right;
            const double err = (s2 - whole) / 15.0;
            if (depth <= 0 || std::abs(err) <= tol) return s2 + err;
            return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
                   recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
        }
    };
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
    return Impl{f}.recurse(a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

} // namespace bernstein
