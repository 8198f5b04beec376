#pragma once

#include "csk/grid.hpp"
#include "csk/kernels.hpp"
#include "csk/params.hpp"

#include <functional>

namespace csk {

/// Weighted L^p_m norm of a grid function (trapezoid on the grid). Kept as
/// a free function mirroring GridFunction::norm for call sites that carry
/// the exponent separately.
double weighted_norm(const GridFunction& f, double p);

/// [e^{tA} f](y) = int_0^inf p(t,y,rho) f(rho) d(rho) evaluated on the
/// grid of f by adaptive quadrature per output node. The integrand is split
/// at rho = y (kernel kink in the envelope) and truncated where the
/// Gaussian exponent falls below -40. f is extended by its endpoint values
/// beyond the grid.
GridFunction apply_semigroup(const KernelSpec& spec, double t, const GridFunction& f,
                             double rel_tol = 1e-8);

/// Same quadrature against the resolvent kernel: (lambda - A)^{-1} f.
GridFunction apply_resolvent(const KernelSpec& spec, double lambda, const GridFunction& f,
                             double rel_tol = 1e-8);

/// Resolvent evaluated at a single point by adaptive quadrature.
double resolvent_at(const KernelSpec& spec, double lambda, double y,
                    const GridFunction& f, double rel_tol = 1e-10);

/// O(n) two-sweep resolvent on the grid itself, exploiting the product
/// structure I(min) K(max) of the Green function. Trapezoid accuracy in
/// the grid spacing, which must resolve the kernel scale 1/sqrt(lambda);
/// overflow-safe for any lambda. Used by the tensor solver where the same
/// grid carries every frequency.
GridFunction apply_resolvent_grid(const KernelSpec& spec, double lambda,
                                  const GridFunction& f);

/// Hardy averaging operators on the half line:
///   H1 f(y) = y^{-c-1} int_0^y f(s) s^c ds,
///   H2 f(y) = y^{-c-1} int_y^inf f(s) s^c ds,
/// by cumulative trapezoid on the grid. Below the grid f is extended by its
/// first value (closed-form tail, needs c > -1); above the grid the tail is
/// dropped.
GridFunction hardy_apply(HardyKind which, double c, const GridFunction& f);

} // namespace csk
