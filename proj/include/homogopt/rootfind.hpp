#ifndef HOMOGOPT_ROOTFIND_HPP
#define HOMOGOPT_ROOTFIND_HPP

#include <cmath>
#include <functional>

namespace homogopt {

/// Golden-section search for a minimum of `f` on [a, b]. Exact for
/// quasi-convex f; on other inputs it converges to some local structure.
template <typename F>
double golden_section_minimize(F&& f, double a, double b, double tol) {
    constexpr double inv_phi = 0.6180339887498949; // (sqrt(5)-1)/2
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

/// Bisection for a sign change of `f` on [lo, hi]. Requires f(lo) and f(hi)
/// of opposite (or zero) sign; returns the midpoint of the final bracket.
template <typename F>
double bisect_root(F&& f, double lo, double hi, double tol, int max_iter = 200) {
    double flo = f(lo);
    for (int i = 0; i < max_iter && (hi - lo) > tol; ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((flo < 0.0) != (fm < 0.0)) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace homogopt

#endif
