#pragma once

#include <cmath>
#include <functional>

#include "capsim/errors.hpp"

namespace capsim::specfun {

/// Tolerances for the adaptive integrator used by the oracle checks.
struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 48;  // maximum bisection depth per branch
};

namespace detail {

// 16-point Gauss-Legendre nodes/weights on [-1,1], computed once by Newton
// iteration on the Legendre recurrence (no hard-coded node tables).
struct Gauss16 {
    double x[8];
    double w[8];
    Gauss16() {
        constexpr int n = 16;
        for (int i = 0; i < 8; ++i) {
            double t = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = t;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (t * p1 - p0) / (t * t - 1.0);
                double step = p1 / dp;
                t -= step;
                if (std::fabs(step) < 1e-16) break;
            }
            x[i] = t;
            w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
    }
};

inline const Gauss16& gauss16() {
    static const Gauss16 table;
    return table;
}

template <typename F>
double gl16(F&& f, double a, double b) {
    const Gauss16& g = gauss16();
    double mid = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 8; ++i) {
        double dx = half * g.x[i];
        s += g.w[i] * (f(mid + dx) + f(mid - dx));
    }
    return s * half;
}

template <typename F>
double adapt(F&& f, double a, double b, double whole, double tol, int depth, int max_depth) {
    double mid = 0.5 * (a + b);
    double left = gl16(f, a, mid);
    double right = gl16(f, mid, b);
    double err = std::fabs(left + right - whole);
    if (err <= tol || depth >= max_depth) return left + right;
    return adapt(f, a, mid, left, 0.5 * tol, depth + 1, max_depth) +
           adapt(f, mid, b, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace detail

/// Adaptive Gauss-Legendre integration of f over [a, b].
template <typename F>
double integrate(F&& f, double a, double b, QuadratureSpec spec = {}) {
    if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0) || spec.max_subdivisions < 1)
        throw DomainError("integrate: invalid quadrature spec");
    if (a == b) return 0.0;
    // Rough composite pass to set the scale for the relative tolerance.
    double rough = 0.0;
    for (int i = 0; i < 8; ++i) {
        double lo = a + (b - a) * i / 8.0;
        double hi = a + (b - a) * (i + 1) / 8.0;
        rough += detail::gl16(f, lo, hi);
    }
    double tol = std::fmax(spec.abs_tol, spec.rel_tol * std::fabs(rough));
    return detail::adapt(f, a, b, detail::gl16(f, a, b), tol, 0, spec.max_subdivisions);
}

/// Integrate f from a to infinity, truncating once the integrand falls below
/// 1e-16 of the largest magnitude seen while scanning outward.
template <typename F>
double integrate_to_decay(F&& f, double a, double step_hint, QuadratureSpec spec = {}) {
    double peak = 0.0;
    double b = a;
    double step = step_hint > 0.0 ? step_hint : 1.0;
    for (int i = 0; i < 400; ++i) {
        b += step;
        double v = std::fabs(f(b));
        peak = std::fmax(peak, std::fabs(f(b - 0.5 * step)));
        peak = std::fmax(peak, v);
        if (v < 1e-16 * peak && i >= 4) break;
        if (i > 0 && i % 8 == 0) step *= 2.0;  // exponential scan outward
    }
    return integrate(f, a, b, spec);
}

}  // namespace capsim::specfun
