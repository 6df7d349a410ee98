#include "capsim/oracles.hpp"

#include <cmath>

#include "capsim/errors.hpp"
#include "capsim/util.hpp"

namespace capsim::oracles {

double bessel_j0_series(double x) {
    long double q = 0.25L * static_cast<long double>(x) * x;
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 1; k <= 120; ++k) {
        term *= -q / (static_cast<long double>(k) * k);
        sum += term;
        if (fabsl(term) < 1e-22L * (1.0L + fabsl(sum))) break;
    }
    return static_cast<double>(sum);
}

double bessel_j0_asymptotic(double x) {
    // J0(x) ~ sqrt(2/(pi x)) [cos(chi) A(x) - sin(chi) B(x)], chi = x - pi/4,
    // with the Hankel coefficients a_{k+1} = a_k (-(2k+1)^2) / (8(k+1)).
    // Truncated at the smallest term (error ~ e^{-2x} scale).
    double chi = x - 0.25 * kPi;
    double a = 1.0;
    double acos_sum = 0.0, bsin_sum = 0.0;
    double prev_mag = 1e300;
    for (int k = 0; k < 60; ++k) {
        double term = a / std::pow(x, k);
        if (std::fabs(term) >= prev_mag) break;  // divergence point: stop
        prev_mag = std::fabs(term);
        int sign = ((k / 2) % 2 == 0) ? 1 : -1;
        if (k % 2 == 0) {
            acos_sum += sign * term;
        } else {
            bsin_sum += sign * term;
        }
        a *= -(2.0 * k + 1.0) * (2.0 * k + 1.0) / (8.0 * (k + 1.0));
    }
    return std::sqrt(2.0 / (kPi * x)) * (std::cos(chi) * acos_sum - std::sin(chi) * bsin_sum);
}

double bessel_j0_reference(double x) {
    x = std::fabs(x);
    return (x <= 18.0) ? bessel_j0_series(x) : bessel_j0_asymptotic(x);
}

double e1_series(double x) {
    constexpr long double euler_gamma = 0.5772156649015328606065L;
    long double sum = -euler_gamma - logl(static_cast<long double>(x));
    long double term = 1.0L;
    for (int k = 1; k <= 80; ++k) {
        term *= -static_cast<long double>(x) / k;
        sum -= term / k;
        if (fabsl(term / k) < 1e-22L * fabsl(sum)) break;
    }
    return static_cast<double>(sum);
}

double e1_scaled_quadrature(double x) {
    if (!(x > 0.0)) throw DomainError("e1_scaled_quadrature: x must be > 0");
    specfun::QuadratureSpec spec;
    spec.abs_tol = 1e-16;
    spec.rel_tol = 1e-13;
    auto f = [x](double u) { return std::exp(-u) / (u + x); };
    return specfun::integrate(f, 0.0, 45.0, spec);
}

double e1_reference(double x) { return std::exp(-x) * e1_scaled_quadrature(x); }

double phi_quadrature(double a, double b) {
    specfun::QuadratureSpec spec;  // abs 1e-12 / rel 1e-10 defaults
    auto f = [a, b](double u) { return std::log(u + a) * std::exp(-b * u); };
    return specfun::integrate_to_decay(f, 0.0, 2.0 / b, spec);
}

double theta_quadrature(double a, double m, double n) {
    specfun::QuadratureSpec inner;
    inner.abs_tol = 1e-13;
    inner.rel_tol = 1e-11;
    specfun::QuadratureSpec outer;  // defaults
    auto integrand_y = [&](double y) {
        auto fx = [&](double x) { return std::exp(-m * (y - x)) * std::exp(-n * x); };
        return std::log(y + a) * specfun::integrate(fx, 0.0, y, inner);
    };
    double rate = std::fmin(m, n);
    return specfun::integrate_to_decay(integrand_y, 0.0, 1.0 / rate, outer);
}

double sinr_transcribed(double gain_own, double gain_other, double psi_s, double psi_r,
                        double sigma_e2_own, double sigma_e2_other) {
    double ps_t = psi_s + psi_s * psi_r * sigma_e2_own;
    double pr_t = psi_r + 3.0 * psi_s * psi_r * sigma_e2_own + psi_s * psi_r * sigma_e2_other;
    double c = 2.0 * psi_r * psi_s * sigma_e2_own * sigma_e2_own +
               psi_r * psi_s * sigma_e2_other * sigma_e2_other + psi_r * sigma_e2_own + 1.0;
    return psi_r * psi_s * gain_own * gain_other /
           ((ps_t + pr_t) * gain_own + ps_t * gain_other + c);
}

namespace {

template <typename G>
double expect_two_exponentials(double s1, double s2, G&& g) {
    specfun::QuadratureSpec inner;
    inner.abs_tol = 1e-12;
    inner.rel_tol = 1e-9;
    specfun::QuadratureSpec outer;
    outer.abs_tol = 1e-11;
    outer.rel_tol = 1e-8;
    auto outer_f = [&](double u) {
        auto inner_f = [&](double v) { return g(u, v) * std::exp(-v / s2) / s2; };
        double iv = specfun::integrate_to_decay(inner_f, 0.0, s2, inner);
        return iv * std::exp(-u / s1) / s1;
    };
    return specfun::integrate_to_decay(outer_f, 0.0, s1, outer);
}

}  // namespace

double n1_capacity_quadrature(double psi_s, double psi_r, double sigma_e2_1,
                              double sigma_e2_2, double s1, double s2) {
    auto g = [&](double g1, double g2) {
        double snr1 = sinr_transcribed(g1, g2, psi_s, psi_r, sigma_e2_1, sigma_e2_2);
        double snr2 = sinr_transcribed(g2, g1, psi_s, psi_r, sigma_e2_2, sigma_e2_1);
        return 0.5 * (std::log2(1.0 + snr1) + std::log2(1.0 + snr2));
    };
    return expect_two_exponentials(s1, s2, g);
}

double n1_bound_capacity_quadrature(double psi_s, double psi_r, double sigma_e2_1,
                                    double sigma_e2_2, double s1, double s2) {
    auto dir = [&](double gown, double gother, double se_own, double se_other) {
        double ps_t = psi_s + psi_s * psi_r * se_own;
        double pr_t = psi_r + 3.0 * psi_s * psi_r * se_own + psi_s * psi_r * se_other;
        double m = ps_t / psi_s;
        double n = (ps_t + pr_t) / psi_r;
        return std::log((psi_r * gown + m) * (psi_s * gother + n) /
                        ((ps_t + pr_t) * gown + ps_t * gother + m * n));
    };
    auto g = [&](double g1, double g2) {
        return (dir(g1, g2, sigma_e2_1, sigma_e2_2) + dir(g2, g1, sigma_e2_2, sigma_e2_1)) /
               (2.0 * kLn2);
    };
    return expect_two_exponentials(s1, s2, g);
}

}  // namespace capsim::oracles
