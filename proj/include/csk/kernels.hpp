#pragma once

#include "csk/params.hpp"

#include <span>

namespace csk {

/// Which realization's kernel to evaluate.
///  - Neumann / Dirichlet: pure Bessel operator (b = 0), orders (c-1)/2 and
///    (1-c)/2 respectively;
///  - Standard: the Dirichlet-type realization of the full operator L,
///    order sqrt(D) (requires D >= 0);
///  - Alternate: the second realization existing for 0 < D < 1, order
///    -sqrt(D).
enum class Realization { Neumann, Dirichlet, Standard, Alternate };

struct KernelSpec {
    OperatorParams op{};
    Realization realization = Realization::Standard;
    /// Bessel argument above which scaled evaluation is mandatory. The
    /// implementation works in log space throughout, which subsumes it.
    double overflow_cap = 600.0;

    /// Bessel order of the kernel. Throws AdmissibilityError when the
    /// realization is not available for these coefficients.
    double order() const;
};

/// Heat kernel p(t,y,rho) with respect to Lebesgue measure d(rho):
///   p = (1/2t) y^{(1-c)/2} rho^{(1+c)/2} e^{-(y^2+rho^2)/4t} I_ord(y rho/2t).
/// y = 0 returns the analytic limit.
double heat_kernel(const KernelSpec& spec, double t, double y, double rho);

/// d/dy of the heat kernel,
///   D_y p = [ (a+ord)/y - y/2t + (rho/2t) I_{ord+1}/I_ord ] p
/// with a = (1-c)/2 (so a+ord = 0 for Neumann, 1-c for Dirichlet, -s1 for
/// the standard realization).
double heat_kernel_dy(const KernelSpec& spec, double t, double y, double rho);

/// Resolvent kernel of (lambda - A)^{-1} with respect to Lebesgue measure,
///   y^{(1-c)/2} rho^{(1+c)/2} I_ord(sqrt(lambda) min) K_ord(sqrt(lambda) max).
/// Dividing by rho^c restores the symmetric Green function.
double green_function(const KernelSpec& spec, double lambda, double y, double rho);

/// Pointwise upper envelope
///   C t^{-1/2-g} (y/sqrt t ^ 1)^{a_y} (rho/sqrt t ^ 1)^{a_rho}
///       exp(-(y-rho)^2 / (kappa t)),
/// g = 0 for the kernel itself, g = 1/2 for its y-gradient.
struct EnvelopeParams {
    double C = 1.0;
    double kappa = 4.5;
    double a_y = 0.0;
    double a_rho = 0.0;
    bool gradient = false;

    double value(double t, double y, double rho) const;
};

/// Envelope exponents for the requested realization, unit constant.
EnvelopeParams envelope(const KernelSpec& spec, double kappa = 4.5, bool gradient = false);

struct EnvelopeFit {
    EnvelopeParams env;    ///< with the fitted constant
    double max_ratio;      ///< max kernel/envelope over the samples (== C)
    std::size_t n_samples;
    bool positive;         ///< all sampled kernel values were >= 0
};

/// Fits the smallest constant C such that kernel <= C * envelope on a log
/// grid of (t,y,rho) joined with quasi-random samples, and reports whether
/// positivity held. Throws AdmissibilityError on bad parameters.
EnvelopeFit envelope_check(const KernelSpec& spec, double kappa = 4.5,
                           bool gradient = false, std::size_t n_quasi = 100000);

/// (N+1)-dimensional product kernel
///   (4 pi t)^{-N/2} e^{-|x1-x2|^2/4t} p(t, y1, y2).
/// N = 0 reduces to heat_kernel exactly.
double product_kernel(const KernelSpec& spec, double t,
                      std::span<const double> x1, double y1,
                      std::span<const double> x2, double y2);

} // namespace csk
