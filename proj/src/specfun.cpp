#include "capsim/specfun.hpp"

#include <cmath>

#include "capsim/errors.hpp"
#include "capsim/util.hpp"

namespace capsim::specfun {

namespace {

// Ascending power series, accurate to ~1e-14 absolute for |x| <= 8 (the
// alternating terms peak near e^x/(pi x), which stays small enough there).
double j0_series(double x) {
    double q = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 80; ++k) {
        term *= -q / (static_cast<double>(k) * k);
        sum += term;
        if (std::fabs(term) < 1e-18 * (1.0 + std::fabs(sum))) break;
    }
    return sum;
}

// Midpoint rule on J0(x) = (1/pi) int_0^pi cos(x sin t) dt. The rule's
// aliasing error is a tail of Bessel functions of order >= 2K, which is
// below machine epsilon once 2K comfortably exceeds e*|x|/2.
double j0_integral(double x) {
    int k_nodes = 64 + 8 * static_cast<int>(std::ceil(std::fabs(x) / 8.0 + 3.0));
    KahanSum acc;
    double h = kPi / k_nodes;
    for (int k = 0; k < k_nodes; ++k) {
        double t = (k + 0.5) * h;
        acc.add(std::cos(x * std::sin(t)));
    }
    return acc.value() / k_nodes;
}

// Continued fraction for e^x E1(x) (modified Lentz), valid for x >= ~1.
double e1_scaled_cf(double x) {
    constexpr double tiny = 1e-300;
    constexpr double eps = 1e-17;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 300; ++i) {
        double a = -static_cast<double>(i) * i;
        b += 2.0;
        d = a * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + a / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < eps) break;
    }
    return h;
}

// -gamma - ln x + sum (-1)^{k+1} x^k / (k k!), fine for x <= 1.
double e1_series(double x) {
    constexpr double euler_gamma = 0.57721566490153286061;
    double sum = -euler_gamma - std::log(x);
    double term = 1.0;
    for (int k = 1; k <= 60; ++k) {
        term *= -x / k;
        sum += -term / k;
        if (std::fabs(term / k) < 1e-18 * std::fabs(sum)) break;
    }
    return sum;
}

}  // namespace

double bessel_j0(double x) {
    if (!std::isfinite(x)) throw DomainError("bessel_j0: argument must be finite");
    x = std::fabs(x);
    return (x <= 8.0) ? j0_series(x) : j0_integral(x);
}

double exp_e1(double x) {
    if (!(x > 0.0)) throw DomainError("exp_e1: argument must be > 0");
    if (x <= 1.0) return e1_series(x);
    return std::exp(-x) * e1_scaled_cf(x);
}

double exp_scaled_e1(double x) {
    if (!(x > 0.0)) throw DomainError("exp_scaled_e1: argument must be > 0");
    if (x <= 1.0) return std::exp(x) * e1_series(x);
    return e1_scaled_cf(x);
}

double phi(double a, double b) {
    if (!(a > 0.0)) throw DomainError("phi: a must be > 0");
    if (!(b > 0.0)) throw DomainError("phi: b must be > 0");
    return (std::log(a) + exp_scaled_e1(a * b)) / b;
}

double theta(double a, double m, double n) {
    if (!(a > 0.0)) throw DomainError("theta: a must be > 0");
    if (!(m > 0.0)) throw DomainError("theta: m must be > 0");
    if (!(n > 0.0)) throw DomainError("theta: n must be > 0");
    double hi = std::fmax(m, n);
    if (std::fabs(m - n) <= 1e-9 * hi) {
        // theta is symmetric in (m,n); evaluating the equal-rate form at the
        // midpoint keeps the branch seam error at O((m-n)^2).
        double mu = 0.5 * (m + n);
        double amu = a * mu;
        return (1.0 - amu * exp_scaled_e1(amu) + mu * phi(a, mu)) / (mu * mu);
    }
    return (phi(a, n) - phi(a, m)) / (m - n);
}

}  // namespace capsim::specfun
