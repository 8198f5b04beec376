#include "csk/kernels.hpp"
#include "csk/specfun.hpp"

#include <cmath>
#include <limits>

namespace csk {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

void check_tyr(double t, double y, double rho, bool allow_y0)
{
    if (!(t > 0.0)) throw DomainError("kernel: t must be > 0");
    if (!(rho > 0.0)) throw DomainError("kernel: rho must be > 0");
    if (allow_y0 ? !(y >= 0.0) : !(y > 0.0))
        throw DomainError("kernel: y out of range");
}

} // namespace

double KernelSpec::order() const
{
    switch (realization) {
    case Realization::Neumann:
        if (!(op.c > -1.0) || op.b != 0.0)
            throw AdmissibilityError("Neumann kernel needs b = 0, c > -1");
        return 0.5 * (op.c - 1.0);
    case Realization::Dirichlet:
        if (!(op.c < 1.0) || op.b != 0.0)
            throw AdmissibilityError("Dirichlet kernel needs b = 0, c < 1");
        return 0.5 * (1.0 - op.c);
    case Realization::Standard: {
        const double D = op.discriminant();
        if (D < 0.0) throw AdmissibilityError("standard kernel needs D >= 0");
        return std::sqrt(D);
    }
    case Realization::Alternate: {
        const double D = op.discriminant();
        if (!(D > 0.0 && D < 1.0))
            throw AdmissibilityError("alternate kernel needs 0 < D < 1");
        return -std::sqrt(D);
    }
    }
    throw DomainError("unreachable");
}

double heat_kernel(const KernelSpec& spec, double t, double y, double rho)
{
    check_tyr(t, y, rho, /*allow_y0=*/true);
    const double ord = spec.order();
    const double a = 0.5 * (1.0 - spec.op.c);
    const double brho = 0.5 * (1.0 + spec.op.c);

    if (y == 0.0) {
        // p ~ K y^{a+ord} as y -> 0 with
        // K = (1/2t) rho^{brho+ord} (4t)^{-ord} / Gamma(ord+1) e^{-rho^2/4t}
        const double e = a + ord;
        if (e > 0.0) return 0.0;
        const double log_k = -std::log(2.0 * t) + (brho + ord) * std::log(rho)
            - ord * std::log(4.0 * t) - std::lgamma(ord + 1.0)
            - rho * rho / (4.0 * t);
        if (e == 0.0) return std::exp(log_k);
        return inf;
    }

    const double w = y * rho / (2.0 * t);
    const double diff = y - rho;
    const double log_p = -std::log(2.0 * t) + a * std::log(y) + brho * std::log(rho)
        - diff * diff / (4.0 * t)
        + std::log(specfun::bessel_i(ord, w, /*scaled=*/true));
    return std::exp(log_p);
}

double heat_kernel_dy(const KernelSpec& spec, double t, double y, double rho)
{
    check_tyr(t, y, rho, /*allow_y0=*/true);
    const double ord = spec.order();
    const double a = 0.5 * (1.0 - spec.op.c);
    const double e = a + ord; // net power of y at the origin

    if (y == 0.0) {
        if (e == 0.0) return 0.0;      // Neumann-type: slope vanishes
        if (e > 1.0) return 0.0;       // kernel flatter than linear
        if (e == 1.0) {
            // derivative tends to the coefficient of y
            const double brho = 0.5 * (1.0 + spec.op.c);
            const double log_k = -std::log(2.0 * t) + (brho + ord) * std::log(rho)
                - ord * std::log(4.0 * t) - std::lgamma(ord + 1.0)
                - rho * rho / (4.0 * t);
            return std::exp(log_k);
        }
        return e > 0.0 ? inf : -inf;
    }

    const double w = y * rho / (2.0 * t);
    const double ratio = specfun::bessel_i_ratio(ord, w);
    const double factor = e / y - y / (2.0 * t) + rho / (2.0 * t) * ratio;
    return factor * heat_kernel(spec, t, y, rho);
}

double green_function(const KernelSpec& spec, double lambda, double y, double rho)
{
    if (!(lambda > 0.0)) throw DomainError("green_function: lambda must be > 0");
    check_tyr(1.0, y, rho, /*allow_y0=*/false);
    const double ord = spec.order();
    const double a = 0.5 * (1.0 - spec.op.c);
    const double brho = 0.5 * (1.0 + spec.op.c);

    const double s = std::sqrt(lambda);
    const double u = s * std::min(y, rho);
    const double v = s * std::max(y, rho);
    const double log_g = a * std::log(y) + brho * std::log(rho)
        + std::log(specfun::bessel_i(ord, u, /*scaled=*/true))
        + std::log(specfun::bessel_k(ord, v, /*scaled=*/true))
        + (u - v);
    return std::exp(log_g);
}

double EnvelopeParams::value(double t, double y, double rho) const
{
    const double st = std::sqrt(t);
    const double fy = std::min(y / st, 1.0);
    const double fr = std::min(rho / st, 1.0);
    const double diff = y - rho;
    const double tpow = gradient ? 1.0 / t : 1.0 / st;
    return C * tpow * std::pow(fy, a_y) * std::pow(fr, a_rho)
        * std::exp(-diff * diff / (kappa * t));
}

EnvelopeParams envelope(const KernelSpec& spec, double kappa, bool gradient)
{
    EnvelopeParams env;
    env.kappa = kappa;
    env.gradient = gradient;
    const double c = spec.op.c;
    switch (spec.realization) {
    case Realization::Neumann:
        env.a_y = gradient ? 1.0 : 0.0;
        env.a_rho = c;
        break;
    case Realization::Dirichlet:
        env.a_y = gradient ? -c : 1.0 - c;
        env.a_rho = 1.0;
        break;
    case Realization::Standard:
    case Realization::Alternate: {
        const auto roots = indicial_roots(spec.op);
        if (!roots) throw AdmissibilityError("envelope: D < 0");
        const double s = spec.realization == Realization::Standard ? roots->s1 : roots->s2;
        env.a_y = gradient ? -s - 1.0 : -s;
        env.a_rho = -s + c;
        break;
    }
    }
    return env;
}

namespace {

double halton(std::size_t i, unsigned base)
{
    double f = 1.0, r = 0.0;
    while (i > 0) {
        f /= base;
        r += f * (i % base);
        i /= base;
    }
    return r;
}

} // namespace

EnvelopeFit envelope_check(const KernelSpec& spec, double kappa, bool gradient,
                           std::size_t n_quasi)
{
    const EnvelopeParams shape = envelope(spec, kappa, gradient);
    auto eval = [&](double t, double y, double rho) {
        return gradient ? std::abs(heat_kernel_dy(spec, t, y, rho))
                        : heat_kernel(spec, t, y, rho);
    };

    double max_ratio = 0.0;
    bool positive = true;
    std::size_t n = 0;

    auto visit = [&](double t, double y, double rho) {
        const double k = eval(t, y, rho);
        if (!gradient && k < 0.0) positive = false;
        const double env = shape.value(t, y, rho);
        if (env > 0.0) max_ratio = std::max(max_ratio, std::abs(k) / env);
        ++n;
    };

    // log grid: t in [1e-3, 1e3], y, rho in [1e-3, 1e2]
    for (int it = 0; it <= 12; ++it)
        for (int iy = 0; iy <= 20; ++iy)
            for (int ir = 0; ir <= 20; ++ir)
                visit(std::pow(10.0, -3.0 + 0.5 * it),
                      std::pow(10.0, -3.0 + 0.25 * iy),
                      std::pow(10.0, -3.0 + 0.25 * ir));

    // quasi-random refinement of the same box
    for (std::size_t i = 1; i <= n_quasi; ++i)
        visit(std::pow(10.0, -3.0 + 6.0 * halton(i, 2)),
              std::pow(10.0, -3.0 + 5.0 * halton(i, 3)),
              std::pow(10.0, -3.0 + 5.0 * halton(i, 5)));

    if (!positive) throw FitFailure("envelope_check: kernel negative at a sample");

    EnvelopeFit fit;
    fit.env = shape;
    fit.env.C = max_ratio;
    fit.max_ratio = max_ratio;
    fit.n_samples = n;
    fit.positive = positive;
    return fit;
}

double product_kernel(const KernelSpec& spec, double t,
                      std::span<const double> x1, double y1,
                      std::span<const double> x2, double y2)
{
    if (x1.size() != x2.size())
        throw DomainError("product_kernel: x dimension mismatch");
    const std::size_t N = x1.size();
    double d2 = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        const double d = x1[i] - x2[i];
        d2 += d * d;
    }
    const double gauss = N == 0
        ? 1.0
        : std::exp(-d2 / (4.0 * t)) * std::pow(4.0 * 3.14159265358979323846 * t, -0.5 * static_cast<double>(N));
    return gauss * heat_kernel(spec, t, y1, y2);
}

} // namespace csk
