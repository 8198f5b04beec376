#pragma once

#include "csk/grid.hpp"
#include "csk/report.hpp"

namespace csk {

/// Two-parameter Gaussian family with boundary weights on R^M,
///   S^{a,b}(t) f(y) = t^{-M/2} (|y|/sqrt t ^ 1)^{-alpha}
///       int (|z|/sqrt t ^ 1)^{-beta} e^{-|y-z|^2/(kappa t)} f(z) dz,
/// acting on radial profiles. Bounded on L^p_m iff
/// alpha < (M+m)/p < M - beta.
struct SabSpec {
    double alpha = 0.0;
    double beta = 0.0;
    double theta = 0.0; ///< target weight drop: L^p_m -> L^p_{m - p theta}
    int M = 1;          ///< ambient dimension (radial reduction for M > 1)
    double m = 0.0;
    double kappa = 4.0;

    bool admissible(double p) const
    {
        const double q = (M + m) / p;
        return alpha < q && q < M - beta;
    }
};

/// Applies S^{alpha,beta}(t) to a radial profile (even extension for M = 1),
/// output on the grid of f.
GridFunction sab_apply(const SabSpec& spec, double t, const GridFunction& f,
                       double rel_tol = 1e-7);

/// Near-threshold probe: applies S(1) to the concentrating scale-invariant
/// family f_n = |z|^{-(M+m)/p} 1_{[1/n,1]} for n = 10, 100, ..., n_max and
/// measures r_n = ||S(1) f_n|| / ||f_n|| in L^p_m, with the output norm taken
/// on a grid reaching down to 1/(10n) so that both the alpha (output) and
/// beta (input) thresholds are exercised. Verdict "unbounded" when r_n still
/// grows between the last two n (>= 8%) or grew tenfold overall.
///
/// The report carries one record per n plus a final record comparing the
/// verdict with the analytic condition alpha < (M+m)/p < M-beta.
ProbeReport sab_threshold_probe(const SabSpec& spec, double p, double n_max = 1e4);

} // namespace csk
