#pragma once

namespace capsim::specfun {

/// Bessel function of the first kind, order zero. Even in x, |J0| <= 1.
double bessel_j0(double x);

/// Exponential integral E1(x) = int_x^inf e^{-t}/t dt, x > 0.
double exp_e1(double x);

/// e^x * E1(x) evaluated without forming e^x, so it stays finite for large x
/// (asymptotically 1/x - 1/x^2 + ...).
double exp_scaled_e1(double x);

/// phi(a,b) = int_0^inf ln(x+a) e^{-bx} dx = (ln a + e^{ab} E1(ab)) / b,
/// for a > 0, b > 0. Always evaluated through the scaled E1 so large ab does
/// not overflow.
double phi(double a, double b);

/// theta(a,m,n) = int_0^inf int_0^y ln(y+a) e^{-m(y-x)} e^{-nx} dx dy.
/// Closed form (phi(a,n) - phi(a,m)) / (m - n) away from m = n; near the
/// diagonal that difference cancels catastrophically, so within
/// |m-n| <= 1e-9 max(m,n) the equal-rate form is used at the midpoint rate.
double theta(double a, double m, double n);

}  // namespace capsim::specfun
