#include "csk/halfline_ops.hpp"
#include "csk/quadrature.hpp"
#include "csk/specfun.hpp"

#include <cmath>
#include <sstream>

namespace csk {

namespace {

double max_abs(const GridFunction& f)
{
    double s = 0.0;
    for (double v : f.values) s = std::max(s, std::abs(v));
    return s;
}

} // namespace

double weighted_norm(const GridFunction& f, double p) { return f.norm(p); }

GridFunction apply_semigroup(const KernelSpec& spec, double t, const GridFunction& f,
                             double rel_tol)
{
    if (!(t > 0.0)) throw DomainError("apply_semigroup: t must be > 0");
    (void)spec.order(); // admissibility up front

    // Gaussian exponent below -40 contributes < 1e-17 of the peak.
    const double window = std::sqrt(160.0 * t);
    const double scale = max_abs(f);

    GridFunction out = f;
    quad::Options opt;
    opt.rel_tol = rel_tol;
    opt.abs_tol = 1e-13 * scale * std::max(window, 1.0);

    for (std::size_t i = 0; i < f.size(); ++i) {
        const double y = f.grid[i];
        const double lo = std::max(0.0, y - window);
        const double hi = y + window;
        try {
            out.values[i] = quad::integrate_split(
                [&](double rho) { return heat_kernel(spec, t, y, rho) * f(rho); },
                lo, hi, {y}, opt);
        } catch (const QuadratureFailure&) {
            std::ostringstream msg;
            msg << "apply_semigroup: node y = " << y << " failed";
            throw QuadratureFailure(msg.str());
        }
    }
    return out;
}

GridFunction apply_resolvent(const KernelSpec& spec, double lambda, const GridFunction& f,
                             double rel_tol)
{
    if (!(lambda > 0.0)) throw DomainError("apply_resolvent: lambda must be > 0");
    (void)spec.order();

    const double window = 46.0 / std::sqrt(lambda);
    const double scale = max_abs(f);

    GridFunction out = f;
    quad::Options opt;
    opt.rel_tol = rel_tol;
    opt.abs_tol = 1e-13 * scale * std::max(window, 1.0);

    for (std::size_t i = 0; i < f.size(); ++i) {
        const double y = f.grid[i];
        const double lo = std::max(0.0, y - window);
        const double hi = y + window;
        try {
            out.values[i] = quad::integrate_split(
                [&](double rho) { return green_function(spec, lambda, y, rho) * f(rho); },
                lo, hi, {y}, opt);
        } catch (const QuadratureFailure&) {
            std::ostringstream msg;
            msg << "apply_resolvent: node y = " << y << " failed";
            throw QuadratureFailure(msg.str());
        }
    }
    return out;
}

double resolvent_at(const KernelSpec& spec, double lambda, double y,
                    const GridFunction& f, double rel_tol)
{
    const double window = 46.0 / std::sqrt(lambda);
    const double lo = std::max(f.grid.front(), y - window);
    const double hi = std::min(f.grid.back(), y + window);
    if (!(hi > lo)) return 0.0;
    quad::Options opt;
    opt.rel_tol = rel_tol;
    opt.abs_tol = 1e-14 * max_abs(f);
    return quad::integrate_split(
        [&](double rho) { return green_function(spec, lambda, y, rho) * f(rho); },
        lo, hi, {y}, opt);
}

GridFunction apply_resolvent_grid(const KernelSpec& spec, double lambda,
                                  const GridFunction& f)
{
    if (!(lambda > 0.0)) throw DomainError("apply_resolvent_grid: lambda must be > 0");
    const double ord = spec.order();
    const double a = 0.5 * (1.0 - spec.op.c);
    const double b = 0.5 * (1.0 + spec.op.c);
    const double s = std::sqrt(lambda);
    const std::size_t n = f.size();

    // Trapezoid weights on the grid.
    std::vector<double> w(n, 0.0);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const double h = 0.5 * (f.grid[j + 1] - f.grid[j]);
        w[j] += h;
        w[j + 1] += h;
    }

    // Scaled basis values: ihat = e^{-sy} I_ord(sy), khat = e^{sy} K_ord(sy).
    std::vector<double> ihat(n), khat(n);
    for (std::size_t j = 0; j < n; ++j) {
        ihat[j] = specfun::bessel_i(ord, s * f.grid[j], /*scaled=*/true);
        khat[j] = specfun::bessel_k(ord, s * f.grid[j], /*scaled=*/true);
    }

    // u_i = y_i^a [ khat_i P_i + ihat_i S_i ] with the running exponential
    // factors keeping every term <= its own magnitude (no overflow):
    //   P_i = sum_{j<=i} w_j rho_j^b ihat_j f_j e^{-s(y_i - rho_j)},
    //   S_i = sum_{j>i}  w_j rho_j^b khat_j f_j e^{-s(rho_j - y_i)}.
    std::vector<double> P(n), S(n);
    double run = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (j > 0) run *= std::exp(-s * (f.grid[j] - f.grid[j - 1]));
        run += w[j] * std::pow(f.grid[j], b) * ihat[j] * f.values[j];
        P[j] = run;
    }
    run = 0.0;
    for (std::size_t j = n; j-- > 0;) {
        if (j + 1 < n) {
            run = (run + w[j + 1] * std::pow(f.grid[j + 1], b) * khat[j + 1] * f.values[j + 1])
                * std::exp(-s * (f.grid[j + 1] - f.grid[j]));
        }
        S[j] = run;
    }

    GridFunction out = f;
    for (std::size_t i = 0; i < n; ++i)
        out.values[i] = std::pow(f.grid[i], a) * (khat[i] * P[i] + ihat[i] * S[i]);
    return out;
}

GridFunction hardy_apply(HardyKind which, double c, const GridFunction& f)
{
    const std::size_t n = f.size();
    GridFunction out = f;

    if (which == HardyKind::H1) {
        // cumulative trapezoid of f(s) s^c from below, with the closed-form
        // head int_0^{y_0} f(y_0) s^c ds when it converges
        double acc = c > -1.0
            ? f.values.front() * std::pow(f.grid.front(), c + 1.0) / (c + 1.0)
            : 0.0;
        double prev = f.values.front() * std::pow(f.grid.front(), c);
        out.values[0] = acc * std::pow(f.grid.front(), -c - 1.0);
        for (std::size_t i = 1; i < n; ++i) {
            const double cur = f.values[i] * std::pow(f.grid[i], c);
            acc += 0.5 * (prev + cur) * (f.grid[i] - f.grid[i - 1]);
            prev = cur;
            out.values[i] = acc * std::pow(f.grid[i], -c - 1.0);
        }
        return out;
    }

    // H2: cumulative trapezoid from above; tail above the grid dropped.
    double acc = 0.0;
    double prev = f.values.back() * std::pow(f.grid.back(), c);
    out.values[n - 1] = 0.0;
    for (std::size_t i = n - 1; i-- > 0;) {
        const double cur = f.values[i] * std::pow(f.grid[i], c);
        acc += 0.5 * (prev + cur) * (f.grid[i + 1] - f.grid[i]);
        prev = cur;
        out.values[i] = acc * std::pow(f.grid[i], -c - 1.0);
    }
    return out;
}

} // namespace csk
