#pragma once

#include "csk/errors.hpp"

namespace csk::specfun {

// Modified Bessel functions of real order nu > -1 on the positive real
// axis, accurate to ~1e-13 relative. The scaled variants remove the
// dominant exponential so that kernel code can stay in log space:
//
//   scaled I:  e^{-x} I_nu(x)      scaled K:  e^{x} K_nu(x)

/// I_nu(x) for nu > -1, x >= 0. With scaled=true returns e^{-x} I_nu(x),
/// finite for x up to ~1e8. x = 0 is accepted (limit value).
double bessel_i(double nu, double x, bool scaled = false);

/// log(I_nu(x)) for nu > -1, x > 0. Never overflows.
double log_bessel_i(double nu, double x);

/// K_nu(x) for real nu, x > 0, from the integral representation
/// K_nu(x) = \int_0^inf e^{-x cosh t} cosh(nu t) dt. Even in nu.
/// With scaled=true returns e^{x} K_nu(x).
double bessel_k(double nu, double x, bool scaled = false);

/// I_{nu+1}(x) / I_nu(x) for nu > -1, x > 0, by continued fraction below
/// the asymptotic regime. Positive, tends to 0 like x/(2(nu+1)) as x -> 0
/// and to 1 as x -> inf, with |ratio - 1| <= C (1 ^ 1/x). Stays below 1
/// for nu >= -1/2; for nu in (-1,-1/2) it may exceed 1 by O(1/x).
double bessel_i_ratio(double nu, double x);

/// Relative residual of the recurrence I_nu'(x) = I_{nu+1}(x) + (nu/x) I_nu(x)
/// with I_nu' approximated by a centered difference of step h. Self-test hook.
double derivative_identity_check(double nu, double x, double h = 1e-5);

} // namespace csk::specfun
