#pragma once

#include "capsim/quadrature.hpp"

namespace capsim::oracles {

// Reference evaluations kept deliberately independent of the production
// routines in specfun/sinr: different series, different integral forms, no
// shared code paths. They exist so the validation suite has something honest
// to compare against.

/// Long-double power series for J0; accurate to ~1e-13 absolute up to x ~ 18.
double bessel_j0_series(double x);

/// Optimally-truncated large-argument expansion for J0; use for x >= ~16.
double bessel_j0_asymptotic(double x);

/// Series below 18, asymptotic above (both comfortably under 1e-12 on [0,50]).
double bessel_j0_reference(double x);

/// Alternating series for E1, long-double accumulation; x <= ~4.
double e1_series(double x);

/// e^x E1(x) = int_0^inf e^{-u}/(u+x) du by adaptive quadrature; any x > 0.
double e1_scaled_quadrature(double x);

double e1_reference(double x);

/// int_0^inf ln(x+a) e^{-bx} dx by adaptive quadrature.
double phi_quadrature(double a, double b);

/// Nested adaptive quadrature of the double integral
/// int_0^inf int_0^y ln(y+a) e^{-m(y-x)} e^{-nx} dx dy.
double theta_quadrature(double a, double m, double n);

/// Independent transcription of the relay-path SINR expression, built from
/// scratch (powers, noise, per-link estimation-error variances) rather than
/// from precomputed coefficients.
double sinr_transcribed(double gain_own, double gain_other, double psi_s, double psi_r,
                        double sigma_e2_own, double sigma_e2_other);

/// Ergodic sum capacity for a single relay with independent exponential
/// transmission gains (means s1, s2), evaluated by 2-D quadrature.
double n1_capacity_quadrature(double psi_s, double psi_r, double sigma_e2_1,
                              double sigma_e2_2, double s1, double s2);

/// Same single-relay setting, but the factorized log-ratio bound instead of
/// the exact capacity; 2-D quadrature.
double n1_bound_capacity_quadrature(double psi_s, double psi_r, double sigma_e2_1,
                                    double sigma_e2_2, double s1, double s2);

}  // namespace capsim::oracles
