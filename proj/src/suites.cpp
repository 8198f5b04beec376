#include "csk/suites.hpp"

#include "csk/errors.hpp"
#include "csk/halfline_ops.hpp"
#include "csk/kernels.hpp"
#include "csk/maximal.hpp"
#include "csk/params.hpp"
#include "csk/quadrature.hpp"
#include "csk/sab.hpp"
#include "csk/specfun.hpp"
#include "csk/tensor.hpp"

#include <cmath>
#include <random>

namespace csk {

namespace {

constexpr double pi = 3.14159265358979323846;

double bump(double y, double lo, double hi)
{
    if (y <= lo || y >= hi) return 0.0;
    const double r = 2.0 * (y - lo) / (hi - lo) - 1.0;
    return std::exp(-1.0 / (1.0 - r * r));
}

// C^2 smoothstep and derivatives on [0,1].
double sstep(double u) { return u <= 0 ? 0.0 : u >= 1 ? 1.0 : u * u * u * (10.0 + u * (-15.0 + 6.0 * u)); }
double sstep_d1(double u) { return u <= 0 || u >= 1 ? 0.0 : 30.0 * u * u * (1.0 - u) * (1.0 - u); }
double sstep_d2(double u) { return u <= 0 || u >= 1 ? 0.0 : 60.0 * u * (1.0 - u) * (1.0 - 2.0 * u); }

double reflected_gauss(double t, double y, double rho, double sign)
{
    const double a = std::exp(-(y - rho) * (y - rho) / (4.0 * t));
    const double b = std::exp(-(y + rho) * (y + rho) / (4.0 * t));
    return (a + sign * b) / std::sqrt(4.0 * pi * t);
}

// ---------------------------------------------------------------- suites

ProbeReport suite_params(const SuiteConfig& cfg)
{
    ProbeReport rep;
    rep.suite = "params-identities";
    rep.config = {{"seed", cfg.seed}, {"samples", 1000}};

    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> uni(-4.0, 4.0);

    double worst_sum = 0.0, worst_prod = 0.0, worst_rel = 0.0, worst_shift = 0.0;
    bool unique_ok = true, mono_ok = true;
    int found = 0;
    while (found < 1000) {
        const OperatorParams op{uni(rng), uni(rng)};
        const auto r = indicial_roots(op);
        if (!r) continue;
        ++found;
        worst_sum = std::max(worst_sum, std::abs(r->s1 + r->s2 - (op.c - 1.0)));
        worst_prod = std::max(worst_prod, std::abs(r->s1 * r->s2 + op.b));

        const double p = 1.1 + 0.75 * std::abs(uni(rng));
        const auto rc = rellich_constants(op, {1, 0.0, p});
        const double rhs = (1.0 / p - r->s1 - 2.0) * (r->s2 + 2.0 - 1.0 / p);
        worst_rel = std::max(worst_rel, std::abs(op.b + rc.gamma_p - rhs));

        const double k = 0.25 * uni(rng);
        const auto sh = similarity_shift(op, {1, 0.5, p}, k);
        worst_shift = std::max(worst_shift, std::abs(sh.op.discriminant() - r->D));
        const auto rs = indicial_roots(sh.op);
        if (rs) worst_shift = std::max(worst_shift, std::abs(rs->s1 - (r->s1 + k)));

        // D >= 1: unique whenever inside the generation window
        if (r->D >= 1.0) {
            const double q = r->s1 + (r->s2 + 2.0 - r->s1) * 0.5;
            const auto cl = classify_realization(op, {1, q * p - 1.0, p});
            if (cl.status == ClassifyStatus::Ok && !cl.value.unique) unique_ok = false;
        }

        // A_p monotone in p
        const double m = -0.5 + std::abs(uni(rng));
        const double kk = uni(rng);
        if (muckenhoupt_radial(1, m, kk, p).in_ap
            && !muckenhoupt_radial(1, m, kk, p + 1.0).in_ap)
            mono_ok = false;
    }
    rep.add_bound("root-sum-identity", worst_sum, 1e-12);
    rep.add_bound("root-product-identity", worst_prod, 1e-12);
    rep.add_bound("rellich-identity", worst_rel, 1e-12);
    rep.add_bound("similarity-invariance", worst_shift, 1e-10);
    rep.add_bound("unique-when-D-ge-1", unique_ok ? 0.0 : 1.0, 0.5);
    rep.add_bound("ap-monotone-in-p", mono_ok ? 0.0 : 1.0, 0.5);
    return rep;
}

ProbeReport suite_specfun(const SuiteConfig& cfg)
{
    ProbeReport rep;
    rep.suite = "specfun";
    rep.config = {{"seed", cfg.seed}};

    rep.add_close("i-half-closed-form", specfun::bessel_i(0.5, 1.0),
                  std::sqrt(2.0 / pi) * std::sinh(1.0), 1e-12);
    rep.add_close("k-half-closed-form", specfun::bessel_k(0.5, 1.0),
                  std::sqrt(pi / 2.0) * std::exp(-1.0), 1e-10);
    rep.add_close("k0-log-behaviour", specfun::bessel_k(0.0, 1e-6) / (-std::log(1e-6)),
                  1.0, 0.02);
    rep.add_close("ratio-tanh", specfun::bessel_i_ratio(-0.5, 1.0), std::tanh(1.0), 1e-12);

    double worst_w = 0.0;
    for (double nu : {0.0, 0.3, 0.5, 1.5})
        for (double x : {0.05, 0.7, 5.0, 40.0}) {
            const double w = x * (specfun::bessel_i(nu, x, true) * specfun::bessel_k(nu + 1.0, x, true)
                + specfun::bessel_i(nu + 1.0, x, true) * specfun::bessel_k(nu, x, true));
            worst_w = std::max(worst_w, std::abs(w - 1.0));
        }
    rep.add_bound("wronskian", worst_w, 1e-9);

    rep.add_bound("derivative-identity", specfun::derivative_identity_check(0.5, 1.0), 1e-8);

    // two-sided envelope of I_nu with positive fitted constants
    double c1 = 1e300, c2 = 0.0;
    for (double lx = -6.0; lx <= std::log10(50.0); lx += 0.02) {
        const double x = std::pow(10.0, lx);
        const double v = specfun::bessel_i(0.8, x, true) * std::sqrt(x)
            / std::pow(std::min(x, 1.0), 0.8 + 0.5);
        c1 = std::min(c1, v);
        c2 = std::max(c2, v);
    }
    rep.add_bound("envelope-two-sided", c2 / c1, 50.0);
    return rep;
}

ProbeReport suite_kernel_closed_form(const SuiteConfig& cfg)
{
    ProbeReport rep;
    rep.suite = "kernel-closed-form";
    rep.config = {{"points", 1000}};
    (void)cfg;

    const KernelSpec n0{{0.0, 0.0}, Realization::Neumann};
    const KernelSpec d0{{0.0, 0.0}, Realization::Dirichlet};
    double worst = 0.0;
    for (int it = 0; it < 10; ++it)
        for (int iy = 0; iy < 10; ++iy)
            for (int ir = 0; ir < 10; ++ir) {
                const double t = std::pow(10.0, -2.0 + 4.0 * it / 9.0);
                const double y = std::pow(10.0, -2.0 + 3.0 * iy / 9.0);
                const double rho = std::pow(10.0, -2.0 + 3.0 * ir / 9.0);
                const double rn = reflected_gauss(t, y, rho, 1.0);
                const double rd = reflected_gauss(t, y, rho, -1.0);
                worst = std::max(worst, std::abs(heat_kernel(n0, t, y, rho) - rn) / rn);
                if (rd > 1e-280)
                    worst = std::max(worst, std::abs(heat_kernel(d0, t, y, rho) - rd) / rd);
            }
    rep.add_bound("c0-gaussian-collapse", worst, 1e-10);
    return rep;
}

ProbeReport suite_kernel_symmetry(const SuiteConfig& cfg)
{
    ProbeReport rep;
    rep.suite = "kernel-symmetry";
    rep.config = {{"seed", cfg.seed}};
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    const KernelSpec specs[] = {
        {{0.0, -0.5}, Realization::Neumann},
        {{0.0, 0.6}, Realization::Dirichlet},
        {{1.0, 0.8}, Realization::Standard},
        {{0.3, 0.2}, Realization::Alternate},
    };
    double worst = 0.0;
    for (const auto& spec : specs)
        for (int i = 0; i < 50; ++i) {
            const double t = std::pow(10.0, -2.0 + 4.0 * uni(rng));
            const double y = std::pow(10.0, -2.0 + 3.0 * uni(rng));
            const double rho = std::pow(10.0, -2.0 + 3.0 * uni(rng));
            const double lhs = std::pow(y, spec.op.c) * heat_kernel(spec, t, y, rho);
            const double rhs = std::pow(rho, spec.op.c) * heat_kernel(spec, t, rho, y);
            if (rhs != 0.0) worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
        }
    rep.add_bound("mu_c-symmetry", worst, 1e-11);
    return rep;
}

ProbeReport suite_scaling(const SuiteConfig& cfg)
{
    ProbeReport rep;
    rep.suite = "scaling";
    rep.config = {{"seed", cfg.seed}};
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    const KernelSpec specs[] = {
        {{0.0, 0.5}, Realization::Neumann},
        {{0.0, -0.2}, Realization::Dirichlet},
        {{1.0, 0.0}, Realization::Standard},
    };
    double worst = 0.0;
    for (const auto& spec : specs)
        for (int i = 0; i < 60; ++i) {
            const double s = std::pow(10.0, -1.0 + 2.0 * uni(rng));
            const double t = 0.1 + uni(rng), y = 0.2 + 2.0 * uni(rng), r = 0.2 + 2.0 * uni(rng);
            const double lhs = heat_kernel(spec, s * s * t, s * y, s * r);
            const double rhs = heat_kernel(spec, t, y, r) / s;
            worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
        }
    rep.add_bound("parabolic-scaling", worst, 1e-12);
    return rep;
}

ProbeReport suite_conservation(const SuiteConfig& cfg)
{
    ProbeReport rep;
    rep.suite = "conservation";
    rep.config = {{"triples", 50}};
    (void)cfg;

    double worst = 0.0;
    int count = 0;
    for (double c : {-0.5, 0.0, 1.0, 3.0}) {
        const KernelSpec spec{{0.0, c}, Realization::Neumann};
        for (double t : {0.02, 0.3, 1.0, 7.0}) {
            for (double y : {0.1, 0.7, 2.0, 8.0}) {
                if (count >= 50) break;
                ++count;
                const double window = std::sqrt(160.0 * t);
                const double mass = quad::integrate_split(
                    [&](double rho) { return heat_kernel(spec, t, y, rho); },
                    0.0, y + window, {y}, {1e-11, 1e-16, 40});
                worst = std::max(worst, std::abs(mass - 1.0));
            }
        }
    }
    rep.add_bound("neumann-unit-mass", worst, 1e-8);
    return rep;
}

ProbeReport suite_chapman_kolmogorov(const SuiteConfig& cfg)
{
    ProbeReport rep;
    rep.suite = "chapman-kolmogorov";
    rep.config = {{"seed", cfg.seed}, {"tuples_per_kernel", 20}};
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    const KernelSpec specs[] = {
        {{0.0, 0.5}, Realization::Neumann},
        {{0.0, -0.3}, Realization::Dirichlet},
        {{1.0, 0.0}, Realization::Standard},
    };
    for (const auto& spec : specs) {
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const double t = 0.1 + uni(rng), s = 0.05 + 0.8 * uni(rng);
            const double y = 0.3 + 2.5 * uni(rng), w = 0.3 + 2.5 * uni(rng);
            const double window = std::sqrt(160.0 * std::max(t, s));
            const double got = quad::integrate_split(
                [&](double rho) {
                    return heat_kernel(spec, t, y, rho) * heat_kernel(spec, s, rho, w);
                },
                0.0, std::max(y, w) + window, {y, w}, {1e-9, 1e-16, 40});
            const double want = heat_kernel(spec, t + s, y, w);
            worst = std::max(worst, std::abs(got - want) / want);
        }
        ordered_json params = {{"b", spec.op.b}, {"c", spec.op.c}};
        CheckRecord rec;
        rec.name = "semigroup-composition";
        rec.params = std::move(params);
        rec.measured = worst;
        rec.tolerance = 1e-6;
        rec.pass = worst < 1e-6;
        rep.add(std::move(rec));
    }
    return rep;
}

ProbeReport suite_laplace_transform(const SuiteConfig& cfg)
{
    ProbeReport rep;
    rep.suite = "laplace-transform";
    rep.config = {{"lambdas", {0.5, 1.0, 4.0}}};
    (void)cfg;

    const KernelSpec specs[] = {
        {{0.0, 0.5}, Realization::Neumann},
        {{0.0, -0.3}, Realization::Dirichlet},
        {{1.0, 0.0}, Realization::Standard},
    };
    double worst = 0.0;
    for (const auto& spec : specs)
        for (double lam : {0.5, 1.0, 4.0})
            for (double y : {0.6, 1.5})
                for (double rho : {0.9, 2.4}) {
                    const double got = quad::integrate(
                        [&](double u) {
                            const double t = std::exp(u);
                            return t * std::exp(-lam * t) * heat_kernel(spec, t, y, rho);
                        },
                        -30.0, std::log(60.0 / lam), {1e-9, 1e-15, 40});
                    const double want = green_function(spec, lam, y, rho);
                    worst = std::max(worst, std::abs(got - want) / want);
                }
    rep.add_bound("laplace-identity", worst, 1e-6);
    return rep;
}

ProbeReport suite_pde_residual(const SuiteConfig& cfg)
{
    ProbeReport rep;
    rep.suite = "pde-residual";
    rep.config = ordered_json::object();
    (void)cfg;

    const KernelSpec specs[] = {
        {{0.0, 0.5}, Realization::Neumann},
        {{1.0, 0.5}, Realization::Standard},
    };
    double worst_order_dev = 0.0;
    for (const auto& spec : specs) {
        const double t = 0.8, y = 1.3, rho = 0.9;
        auto residual = [&](double h) {
            const double pt = (heat_kernel(spec, t + h, y, rho)
                               - heat_kernel(spec, t - h, y, rho)) / (2.0 * h);
            const double pyy = (heat_kernel(spec, t, y + h, rho)
                                - 2.0 * heat_kernel(spec, t, y, rho)
                                + heat_kernel(spec, t, y - h, rho)) / (h * h);
            const double py = (heat_kernel(spec, t, y + h, rho)
                               - heat_kernel(spec, t, y - h, rho)) / (2.0 * h);
            const double p = heat_kernel(spec, t, y, rho);
            return std::abs(pt - (pyy + spec.op.c / y * py - spec.op.b / (y * y) * p));
        };
        const double order = std::log2(residual(1e-3) / residual(5e-4));
        CheckRecord rec;
        rec.name = "residual-order";
        rec.params = {{"b", spec.op.b}, {"c", spec.op.c}};
        rec.measured = order;
        rec.expected = 2.0;
        rec.tolerance = 0.2;
        rec.pass = order >= 1.8;
        rep.add(std::move(rec));
        worst_order_dev = std::max(worst_order_dev, std::abs(order - 2.0));
    }
    return rep;
}

ProbeReport suite_gradient_fd(const SuiteConfig& cfg)
{
    ProbeReport rep;
    rep.suite = "gradient-fd";
    rep.config = {{"seed", cfg.seed}, {"tuples", 100}};
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double t = std::pow(10.0, -1.5 + 3.0 * uni(rng));
        const double y = 0.2 + 3.0 * uni(rng);
        const double rho = 0.2 + 3.0 * uni(rng);
        KernelSpec spec;
        switch (i % 3) {
        case 0: spec = {{0.0, -0.8 + 1.6 * uni(rng)}, Realization::Neumann}; break;
        case 1: spec = {{0.0, 0.9 - 1.7 * uni(rng)}, Realization::Dirichlet}; break;
        default: spec = {{0.3 + uni(rng), -1.0 + 2.0 * uni(rng)}, Realization::Standard}; break;
        }
        const double h = 1e-5 * y;
        const double fd = (heat_kernel(spec, t, y + h, rho)
                           - heat_kernel(spec, t, y - h, rho)) / (2.0 * h);
        const double an = heat_kernel_dy(spec, t, y, rho);
        const double scale = std::max(std::abs(fd), heat_kernel(spec, t, y, rho) / y);
        if (scale > 0.0) worst = std::max(worst, std::abs(an - fd) / scale);
    }
    rep.add_bound("gradient-vs-fd", worst, 1e-6);
    return rep;
}

ProbeReport suite_envelope(const SuiteConfig& cfg)
{
    ProbeReport rep;
    rep.suite = "envelope";
    rep.config = {{"kappa", 4.5}};
    const std::size_t n_quasi = static_cast<std::size_t>(cfg.number("n_quasi", 100000));
    rep.config["n_quasi"] = n_quasi;

    const KernelSpec specs[] = {
        {{0.0, 0.5}, Realization::Neumann},
        {{0.0, -0.3}, Realization::Dirichlet},
        {{1.0, 0.0}, Realization::Standard},
    };
    for (const auto& spec : specs) {
        for (bool grad : {false, true}) {
            const auto fit = envelope_check(spec, 4.5, grad, n_quasi);
            const auto fit2 = envelope_check(spec, 4.5, grad, n_quasi / 2);
            CheckRecord rec;
            rec.name = grad ? "gradient-envelope-fit" : "kernel-envelope-fit";
            rec.params = {{"b", spec.op.b}, {"c", spec.op.c}, {"C", fit.max_ratio}};
            rec.measured = std::abs(fit.max_ratio - fit2.max_ratio)
                / std::max(fit.max_ratio, 1e-300);
            rec.tolerance = 0.05;
            rec.pass = std::isfinite(fit.max_ratio) && fit.max_ratio > 0.0
                && rec.measured < 0.05;
            rep.add(std::move(rec));
        }
    }
    // c = 0 Neumann: fitted constant sits below the reflected-Gaussian bound
    const auto f0 = envelope_check({{0.0, 0.0}, Realization::Neumann}, 4.5, false, n_quasi);
    rep.add_bound("neumann-c0-constant", f0.max_ratio, 1.0 / std::sqrt(pi) * 1.0001);
    return rep;
}

ProbeReport suite_norms(const SuiteConfig& cfg)
{
    ProbeReport rep;
    rep.suite = "norms";
    rep.config = ordered_json::object();
    (void)cfg;

    const double m = 0.7, p = 2.5, s = 3.0;
    auto g = geometric_grid(1e-4, 20.0, 4000);
    GridFunction f = sample(g, [](double y) { return bump(y, 1.0, 6.0); }, m);
    GridFunction fs = sample(g, [&](double y) { return bump(s * y, 1.0, 6.0); }, m);
    rep.add_close("dilation-scaling", weighted_norm(fs, p),
                  std::pow(s, -(1.0 + m) / p) * weighted_norm(f, p), 1e-4);

    // norm monotone under pointwise domination
    GridFunction h = f.map([](double v) { return 0.5 * v; });
    rep.add_bound("domination-monotone", weighted_norm(h, p) - weighted_norm(f, p), 0.0);
    return rep;
}

ProbeReport suite_semigroup(const SuiteConfig& cfg)
{
    ProbeReport rep;
    rep.suite = "semigroup";
    rep.config = ordered_json::object();
    (void)cfg;

    const KernelSpec spec{{0.0, 0.5}, Realization::Neumann};
    auto grid = default_grid(160, 160, 1e-5, 30.0);
    GridFunction one = sample(grid, [](double) { return 1.0; }, 0.5);
    const GridFunction su = apply_semigroup(spec, 0.7, one);
    double worst = 0.0;
    for (double v : su.values) worst = std::max(worst, std::abs(v - 1.0));
    rep.add_bound("invariance-of-1", worst, 1e-7);

    GridFunction f = sample(grid, [](double y) { return bump(y, 1.0, 3.0); }, 0.5);
    const GridFunction ft = apply_semigroup(spec, 1e-6, f);
    GridFunction diff = ft;
    for (std::size_t i = 0; i < diff.size(); ++i) diff.values[i] -= f.values[i];
    rep.add_bound("strong-continuity", diff.norm(2.0) / f.norm(2.0), 0.01);

    auto fb = [](double y) { return bump(y, 1.0, 3.0); };
    auto step_at = [&](double t, double y, auto&& func) {
        const double window = std::sqrt(160.0 * t);
        return quad::integrate_split(
            [&](double rho) { return heat_kernel(spec, t, y, rho) * func(rho); },
            std::max(0.0, y - window), y + window, {y}, {1e-9, 1e-16, 40});
    };
    worst = 0.0;
    for (double y : {0.3, 0.9, 1.7, 2.6, 4.0}) {
        const double two = step_at(0.25, y, [&](double r) { return step_at(0.15, r, fb); });
        const double one_step = step_at(0.40, y, fb);
        worst = std::max(worst, std::abs(two - one_step));
    }
    rep.add_bound("semigroup-law", worst, 1e-5);
    return rep;
}

ProbeReport suite_resolvent(const SuiteConfig& cfg)
{
    ProbeReport rep;
    rep.suite = "resolvent";
    rep.config = ordered_json::object();
    (void)cfg;

    const KernelSpec spec{{0.0, 0.0}, Realization::Dirichlet};
    const double want = std::sinh(0.5) * (std::exp(-1.0) - std::exp(-2.0));
    const double direct = quad::integrate(
        [&](double rho) { return green_function(spec, 1.0, 0.5, rho); },
        1.0, 2.0, {1e-10, 1e-16, 30});
    rep.add_close("green-closed-form", direct, want, 1e-8);

    // residual lambda u - A u = f with finite differences away from edges
    const KernelSpec lspec{{1.0, 0.3}, Realization::Standard};
    auto dgrid = geometric_grid(1e-5, 0.8, 300);
    {
        auto mid = geometric_grid(0.8, 12.0, 4000);
        for (std::size_t i = 1; i < mid.size(); ++i) dgrid.push_back(mid[i]);
    }
    GridFunction f = sample(dgrid, [](double y) { return bump(y, 1.0, 3.0); }, 0.0);
    const GridFunction u = apply_resolvent_grid(lspec, 1.0, f);
    double worst = 0.0;
    for (std::size_t i = 2; i + 2 < dgrid.size(); ++i) {
        const double y = dgrid[i];
        if (y < 0.3 || y > 6.0) continue;
        const auto w2 = fd_weights(y, std::span(&dgrid[i - 2], 5), 2);
        const auto w1 = fd_weights(y, std::span(&dgrid[i - 2], 5), 1);
        double uyy = 0.0, uy = 0.0;
        for (int k = 0; k < 5; ++k) {
            uyy += w2[k] * u.values[i - 2 + k];
            uy += w1[k] * u.values[i - 2 + k];
        }
        const double au = uyy + lspec.op.c / y * uy - lspec.op.b / (y * y) * u.values[i];
        worst = std::max(worst, std::abs(u.values[i] - au - f.values[i]));
    }
    rep.add_bound("residual-interior", worst / f.norm(INFINITY), 1e-4);

    // Laplace transform of the semigroup matches the resolvent
    const KernelSpec nspec{{0.0, 0.5}, Realization::Neumann};
    auto grid = default_grid(200, 200, 1e-5, 30.0);
    GridFunction g = sample(grid, [](double y) { return bump(y, 0.8, 2.5); }, 0.5);
    double worst_l = 0.0;
    for (double y : {0.6, 1.4, 2.9}) {
        const double direct2 = resolvent_at(nspec, 2.0, y, g);
        const double via_t = quad::integrate(
            [&](double u2) {
                const double t = std::exp(u2);
                const double window = std::sqrt(160.0 * t);
                const double st = quad::integrate_split(
                    [&](double rho) { return heat_kernel(nspec, t, y, rho) * g(rho); },
                    std::max(g.grid.front(), y - window),
                    std::min(g.grid.back(), y + window), {y}, {1e-9, 1e-15, 30});
                return t * std::exp(-2.0 * t) * st;
            },
            -26.0, std::log(40.0 / 2.0), {1e-8, 1e-14, 40});
        worst_l = std::max(worst_l, std::abs(via_t - direct2) / std::abs(direct2));
    }
    rep.add_bound("laplace-of-semigroup", worst_l, 1e-4);
    return rep;
}

ProbeReport suite_hardy(const SuiteConfig& cfg)
{
    ProbeReport rep;
    rep.suite = "hardy";
    rep.config = {{"triples", 10}};
    (void)cfg;

    struct Case { double c, m, p; HardyKind kind; };
    const Case cases[] = {
        {0.0, 0.0, 2.0, HardyKind::H1}, {1.0, 0.5, 2.0, HardyKind::H1},
        {0.5, 0.2, 3.0, HardyKind::H1}, {2.0, 1.0, 2.0, HardyKind::H1},
        {0.0, -0.4, 1.5, HardyKind::H1}, {1.5, 2.0, 4.0, HardyKind::H1},
        {0.0, 3.0, 2.0, HardyKind::H2}, {0.5, 4.0, 2.0, HardyKind::H2},
        {0.0, 2.0, 1.5, HardyKind::H2}, {1.0, 8.0, 3.0, HardyKind::H2},
    };
    for (const auto& cs : cases) {
        const SpaceParams sp{1, cs.m, cs.p};
        const double q = sp.homogeneity_index();
        const auto best = hardy_constant(cs.c, sp, cs.kind);
        if (!best) continue;
        const double gap = cs.kind == HardyKind::H1 ? (cs.c + 1.0 - q) : (q - cs.c - 1.0);
        const double delta = 0.04 * gap;
        const double depth = 8.0 / (delta * cs.p);
        GridFunction fn{{1.0}, {0.0}, cs.m};
        if (cs.kind == HardyKind::H1) {
            auto g = geometric_grid(std::exp(-std::min(depth, 600.0)), 50.0,
                                    static_cast<std::size_t>(std::min(30.0 * depth, 20000.0)));
            fn = sample(g, [&](double y) { return y <= 1.0 ? std::pow(y, -q + delta) : 0.0; }, cs.m);
        } else {
            auto g = geometric_grid(1e-4, std::exp(std::min(depth, 600.0)),
                                    static_cast<std::size_t>(std::min(30.0 * depth, 20000.0)));
            fn = sample(g, [&](double y) { return y >= 1.0 ? std::pow(y, -q - delta) : 0.0; }, cs.m);
        }
        const GridFunction hf = hardy_apply(cs.kind, cs.c, fn);
        const double ratio = hf.norm(cs.p) / fn.norm(cs.p);
        CheckRecord rec;
        rec.name = "extremal-ratio";
        rec.params = {{"c", cs.c}, {"m", cs.m}, {"p", cs.p},
                      {"kind", cs.kind == HardyKind::H1 ? "H1" : "H2"},
                      {"constant", *best}};
        rec.measured = ratio / *best;
        rec.tolerance = 0.05;
        rec.pass = ratio >= 0.95 * *best && ratio <= 1.02 * *best;
        rep.add(std::move(rec));
    }
    return rep;
}

ProbeReport suite_sab(const SuiteConfig& cfg)
{
    ProbeReport rep;
    rep.suite = "sab";
    rep.config = ordered_json::object();
    (void)cfg;

    // Gaussian closed form
    SabSpec s0;
    s0.kappa = 4.0;
    auto g = geometric_grid(1e-3, 30.0, 900);
    GridFunction one = sample(g, [](double) { return 1.0; }, 0.0);
    const GridFunction s1 = sab_apply(s0, 1.0, one);
    rep.add_close("gaussian-mass", s1(2.0), 2.0 * std::sqrt(pi), 1e-6);

    // scaling identity
    SabSpec sp;
    sp.alpha = 0.3;
    sp.beta = 0.2;
    sp.kappa = 4.0;
    const double s = 2.0, t = 0.7;
    auto gd = geometric_grid(1e-4, 40.0, 2500);
    GridFunction f = sample(gd, [](double z) { return bump(z, 0.5, 4.0); }, 0.0);
    GridFunction fs = sample(gd, [&](double z) { return bump(s * z, 0.5, 4.0); }, 0.0);
    const GridFunction lhs = sab_apply(sp, t, fs, 1e-9);
    const GridFunction rhs = sab_apply(sp, s * s * t, f, 1e-9);
    double worst = 0.0;
    for (double y : {0.3, 0.9, 1.6, 2.4})
        worst = std::max(worst, std::abs(lhs(y) - rhs(s * y)) / std::abs(rhs(s * y)));
    rep.add_bound("dilation-identity", worst, 1e-6);

    // theta-scaling ||S(t) f||_{m - p theta} / ||f||_m =
    //   t^{-theta/2} ||S(1) I_rt f||_{m - p theta} / ||I_rt f||_m
    {
        SabSpec st;
        st.alpha = 0.2; // keep the y^{-alpha p} boundary layer integrable
        st.beta = 0.1;  // well inside the truncated grid
        st.kappa = 4.0;
        st.theta = 0.3;
        st.m = 0.4;
        const double p = 2.0, t2 = 3.0, rt = std::sqrt(t2);
        auto gg = geometric_grid(1e-4, 60.0, 3000);
        GridFunction f2 = sample(gg, [](double z) { return bump(z, 0.5, 4.0); }, st.m);
        GridFunction frt = sample(gg, [&](double z) { return bump(rt * z, 0.5, 4.0); }, st.m);
        GridFunction a1 = sab_apply(st, t2, f2, 1e-9);
        GridFunction a2 = sab_apply(st, 1.0, frt, 1e-9);
        a1.m = st.m - p * st.theta;
        a2.m = st.m - p * st.theta;
        const double lhs4 = a1.norm(p) / f2.norm(p);
        const double rhs4 = std::pow(t2, -0.5 * st.theta) * a2.norm(p) / frt.norm(p);
        rep.add_close("theta-norm-scaling", lhs4, rhs4, 5e-3);
    }

    // elementary inequality (1^r)(1^s) <= 1^rs <= C (1^r)(1^s) e^{eps|r-s|^2}
    double fitted_c = 0.0;
    bool lower_ok = true;
    for (int i = 0; i <= 100; ++i)
        for (int j = 0; j <= 100; ++j) {
            const double r = std::pow(10.0, -2.0 + 4.0 * i / 100.0);
            const double z = std::pow(10.0, -2.0 + 4.0 * j / 100.0);
            const double lhs2 = std::min(1.0, r) * std::min(1.0, z);
            const double mid = std::min(1.0, r * z);
            if (lhs2 > mid * (1.0 + 1e-14)) lower_ok = false;
            const double up = lhs2 * std::exp(0.1 * (r - z) * (r - z));
            fitted_c = std::max(fitted_c, mid / up);
        }
    rep.add_bound("one-wedge-lower", lower_ok ? 0.0 : 1.0, 0.5);
    rep.add_bound("one-wedge-upper-fitted-C", fitted_c, 50.0);

    // domination transfer: |y|^{g1}/|z|^{g2} kernel <= C t^{(g2-g1)/2} S^{a-g1,b+g2}
    // with kappa' = kappa + 0.5, pointwise on samples
    const double g1 = 0.3, g2 = 0.7, kap = 4.0, kapp = 4.5;
    double fit = 0.0;
    for (int i = 0; i < 4000; ++i) {
        const double tt = std::pow(10.0, -2.0 + 4.0 * ((i * 7) % 100) / 100.0);
        const double y = std::pow(10.0, -2.0 + 3.0 * ((i * 13) % 97) / 97.0);
        const double z = std::pow(10.0, -2.0 + 3.0 * ((i * 29) % 89) / 89.0);
        const double st = std::sqrt(tt);
        const double base = std::pow(std::min(y / st, 1.0), -sp.alpha)
            * std::pow(std::min(z / st, 1.0), -sp.beta);
        const double lhs3 = std::pow(y, g1) / std::pow(z, g2) * base
            * std::exp(-(y - z) * (y - z) / (kap * tt));
        const double rhs3 = std::pow(tt, 0.5 * (g2 - g1))
            * std::pow(std::min(y / st, 1.0), -(sp.alpha - g1))
            * std::pow(std::min(z / st, 1.0), -(sp.beta + g2))
            * std::exp(-(y - z) * (y - z) / (kapp * tt));
        if (rhs3 > 0.0) fit = std::max(fit, lhs3 / rhs3);
    }
    rep.add_bound("domination-transfer-fitted-C", fit, 100.0);
    return rep;
}

ProbeReport suite_sab_threshold(const SuiteConfig& cfg)
{
    ProbeReport rep;
    rep.suite = "sab-threshold";
    const double n_max = cfg.number("n_max", 1e6);
    rep.config = {{"n_max", n_max}, {"margin", 0.1}};

    for (double p : {1.5, 2.0, 3.0}) {
        const double q = 1.0 / p;
        for (double kappa : {4.0, 8.0}) {
            for (double da : {-1.0, -0.3, -0.1, 0.1, 0.4}) {
                for (double db : {-1.0, -0.3, -0.1, 0.1, 0.4}) {
                    SabSpec spec;
                    spec.alpha = q + da;
                    spec.beta = (1.0 - q) + db;
                    spec.kappa = kappa;
                    const auto sub = sab_threshold_probe(spec, p, n_max);
                    const auto& v = sub.checks.back();
                    CheckRecord rec;
                    rec.name = "verdict";
                    rec.params = {{"alpha", spec.alpha}, {"beta", spec.beta},
                                  {"p", p}, {"kappa", kappa},
                                  {"verdict", v.params.at("verdict")}};
                    rec.measured = v.measured;
                    rec.expected = v.expected;
                    rec.tolerance = 0.0;
                    rec.pass = v.pass;
                    rep.add(std::move(rec));
                }
            }
        }
    }
    return rep;
}

ProbeReport suite_muckenhoupt(const SuiteConfig& cfg)
{
    ProbeReport rep;
    rep.suite = "muckenhoupt";
    rep.config = {{"samples", 12}, {"seed", cfg.seed}};

    struct Case { double k, p, m; };
    const Case cases[12] = {
        {0.0, 2.0, 0.0}, {0.9, 2.0, 0.0}, {1.1, 2.0, 0.0}, {-0.9, 2.0, 0.0},
        {-1.1, 2.0, 0.0}, {0.5, 1.5, 0.0}, {0.6, 1.5, 0.0}, {2.5, 4.0, 0.0},
        {0.4, 2.0, -0.5}, {0.6, 2.0, -0.5}, {1.4, 2.0, 0.5}, {1.6, 2.0, 0.5},
    };
    for (const auto& cs : cases) {
        const bool analytic = muckenhoupt_radial(1, cs.m, cs.k, cs.p).in_ap;
        const double est1 = ap_constant_estimate(cs.k, 1, cs.m, cs.p, 400, cfg.seed);
        const double est2 = ap_constant_estimate(cs.k, 1, cs.m, cs.p, 800, cfg.seed + 1);
        CheckRecord rec;
        rec.name = "ap-estimate";
        rec.params = {{"k", cs.k}, {"p", cs.p}, {"m", cs.m},
                      {"analytic_in_ap", analytic}, {"estimate", est1}};
        if (analytic) {
            rec.measured = est2 / est1;
            rec.tolerance = 0.25;
            rec.pass = std::isfinite(est1) && est2 <= est1 * 1.25;
        } else {
            rec.measured = est1;
            rec.tolerance = 0.0;
            rec.pass = est1 > 1e3;
        }
        rep.add(std::move(rec));
    }
    return rep;
}

ProbeReport suite_maximal(const SuiteConfig& cfg)
{
    ProbeReport rep;
    rep.suite = "maximal";
    rep.config = {{"seed", cfg.seed}};

    auto g = geometric_grid(0.01, 10.0, 400);
    GridFunction one = sample(g, [](double) { return 1.0; }, 0.0);
    const GridFunction m1 = maximal_function(one);
    double worst = 0.0;
    for (double v : m1.values) worst = std::max(worst, std::abs(v - 1.0));
    rep.add_bound("constant-fixed-point", worst, 1e-12);

    const double k = 0.5, p = 2.0, m = 0.0;
    const double apw = ap_constant_estimate(k, 1, m, p, 400, cfg.seed);
    GridFunction f = sample(g, [](double y) { return bump(y, 0.5, 3.0); }, m);
    const GridFunction lhs = maximal_function(f, m);
    GridFunction fp = f.map([&](double v) { return std::pow(std::abs(v), p); });
    const GridFunction rhs = maximal_function(fp, m + k);
    double worst_dom = 0.0;
    for (std::size_t i = 0; i < f.size(); i += 3) {
        const double bound = std::pow(apw, 1.0 / p) * std::pow(rhs.values[i], 1.0 / p);
        worst_dom = std::max(worst_dom, lhs.values[i] / bound);
    }
    rep.add_bound("weighted-domination", worst_dom, 1.0 + 1e-9);
    return rep;
}

ProbeReport suite_rellich(const SuiteConfig& cfg)
{
    ProbeReport rep;
    const double b = cfg.number("b", 1.0);
    const double c = cfg.number("c", 0.0);
    const double p = cfg.number("p", 2.0);
    rep.suite = "rellich";
    rep.config = {{"b", b}, {"c", c}, {"p", p}};

    const OperatorParams op{b, c};
    const auto rc = rellich_constants(op, {1, 0.0, p});
    if (!rc.best_constant) throw DomainError("rellich suite: constant not available here");
    const double best = *rc.best_constant;

    // Near-extremal profile u = y^{2-1/p} psi(log y): psi a smooth plateau
    // over [-L-w, -w] with ramps of width w, everything below y = 1 so the
    // profile stays bounded. The ratio approaches the sharp constant like
    // 1 - O(w'/L).
    const double sigma = 2.0 - 1.0 / p;
    const double L = 200.0, w = 12.0;
    auto psi = [&](double s) {
        return sstep((s + L + 2.0 * w) / w) * (1.0 - sstep((s + w) / w));
    };
    auto psi_d1 = [&](double s) {
        return sstep_d1((s + L + 2.0 * w) / w) / w * (1.0 - sstep((s + w) / w))
            - sstep((s + L + 2.0 * w) / w) * sstep_d1((s + w) / w) / w;
    };
    auto psi_d2 = [&](double s) {
        return sstep_d2((s + L + 2.0 * w) / w) / (w * w) * (1.0 - sstep((s + w) / w))
            - 2.0 * sstep_d1((s + L + 2.0 * w) / w) / w * sstep_d1((s + w) / w) / w
            - sstep((s + L + 2.0 * w) / w) * sstep_d2((s + w) / w) / (w * w);
    };
    // in log coordinates: u = e^{sigma s} psi, y^{-2} u = e^{(sigma-2)s} psi,
    // L u = e^{(sigma-2)s} [ (sigma(sigma-1) + c sigma - b) psi
    //                        + (2 sigma - 1 + c) psi' + psi'' ]
    const double a0 = sigma * (sigma - 1.0) + c * sigma - b;
    const double a1 = 2.0 * sigma - 1.0 + c;
    const double s_lo = -L - 2.0 * w - 1.0, s_hi = 1.0;

    // 1d L^p norms with respect to dy = e^s ds
    auto lp_log = [&](auto&& fn) {
        return std::pow(quad::integrate(
            [&](double s) { return std::pow(std::abs(fn(s)), p) * std::exp(s); },
            s_lo, s_hi, {1e-10, 1e-14, 44}), 1.0 / p);
    };
    auto lu_log = [&](double s) {
        return std::exp((sigma - 2.0) * s) * (a0 * psi(s) + a1 * psi_d1(s) + psi_d2(s));
    };
    const double num = lp_log([&](double s) { return std::exp((sigma - 2.0) * s) * psi(s); });
    const double den = lp_log(lu_log);
    const double ratio0 = num / den;

    CheckRecord ex;
    ex.name = "extremal-ratio-N0";
    ex.params = {{"constant", best}};
    ex.measured = ratio0;
    ex.expected = best;
    ex.tolerance = 0.05;
    ex.pass = ratio0 >= 0.8 * best && ratio0 <= best * 1.05;
    rep.add(std::move(ex));

    // random bump test set stays below the constant
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 12; ++i) {
        const double lo = 0.3 + 1.5 * uni(rng);
        const double hi = lo + 0.5 + 2.0 * uni(rng);
        auto fd1 = [&](double y, double h) {
            return (bump(y + h, lo, hi) - bump(y - h, lo, hi)) / (2.0 * h);
        };
        auto fd2 = [&](double y, double h) {
            return (bump(y + h, lo, hi) - 2.0 * bump(y, lo, hi) + bump(y - h, lo, hi)) / (h * h);
        };
        auto lpnorm = [&](auto&& fn) {
            return std::pow(quad::integrate(
                [&](double y) { return std::pow(std::abs(fn(y)), p); },
                lo, hi, {1e-8, 1e-14, 36}), 1.0 / p);
        };
        const double h = 1e-5;
        const double nn = lpnorm([&](double y) { return bump(y, lo, hi) / (y * y); });
        const double dd = lpnorm([&](double y) {
            return fd2(y, h) + c / y * fd1(y, h) - b / (y * y) * bump(y, lo, hi);
        });
        if (dd > 0.0) worst = std::max(worst, nn / dd);
    }
    rep.add_bound("test-set-ratio-N0", worst, best * 1.05);

    // N = 1 (only meaningful at p = 2): separable u(x,y) = g(x) u0(y) with
    // a wide Gaussian g; by Fubini
    //   ||L u||_2^2 = ||g''||^2 ||u0||^2 + 2 <g,g''> <u0, L_y u0> + ||g||^2 ||L_y u0||^2
    // and all six factors are 1d integrals.
    if (p == 2.0) {
        const double R = 32.0;
        auto xquad = [&](auto&& fn) {
            return quad::integrate(fn, -8.0 * R, 8.0 * R, {1e-10, 1e-14, 40});
        };
        auto gx = [&](double x) { return std::exp(-x * x / (R * R)); };
        auto gxx = [&](double x) {
            return (4.0 * x * x / (R * R * R * R) - 2.0 / (R * R)) * gx(x);
        };
        const double A = xquad([&](double x) { return gx(x) * gx(x); });
        const double B = xquad([&](double x) { return gxx(x) * gxx(x); });
        const double C = xquad([&](double x) { return gx(x) * gxx(x); });
        auto yquad = [&](auto&& fn) {
            return quad::integrate(
                [&](double s) { return fn(s) * std::exp(s); }, s_lo, s_hi,
                {1e-10, 1e-14, 44});
        };
        const double D = yquad([&](double s) {
            const double u0 = std::exp(sigma * s) * psi(s);
            return u0 * u0;
        });
        const double E = den * den;
        const double F = yquad([&](double s) {
            return std::exp(sigma * s) * psi(s) * lu_log(s);
        });
        const double den1 = std::sqrt(B * D + 2.0 * C * F + A * E);
        const double ratio1 = num * std::sqrt(A) / den1;
        CheckRecord n1;
        n1.name = "extremal-ratio-N1";
        n1.params = {{"R", R}};
        n1.measured = ratio1;
        n1.expected = best;
        n1.tolerance = 0.05;
        n1.pass = ratio1 >= 0.8 * best && ratio1 <= best * 1.05;
        rep.add(std::move(n1));
    }
    return rep;
}

ProbeReport suite_boundary_limits(const SuiteConfig& cfg)
{
    ProbeReport rep;
    rep.suite = "boundary-limits";
    rep.config = ordered_json::object();
    (void)cfg;

    const KernelSpec spec{{1.0, 0.0}, Realization::Standard};
    const auto roots = indicial_roots(spec.op);
    auto grid = geometric_grid(1e-6, 4.0, 600);
    GridFunction f = sample(grid, [](double y) { return bump(y, 1.0, 2.0); }, 0.0);

    bool monotone = true;
    double prev = 1e300, last = 0.0;
    for (int j = 6; j <= 16; ++j) {
        const double y = std::pow(2.0, -j);
        const double v = std::pow(y, roots->s2) * resolvent_at(spec, 1.0, y, f);
        if (j > 10 && v >= prev) monotone = false; // last 6 points monotone
        prev = v;
        last = v;
    }
    rep.add_bound("dirichlet-weighted-limit", last, 1e-3);
    rep.add_bound("dirichlet-monotone-tail", monotone ? 0.0 : 1.0, 0.5);

    const KernelSpec nspec{{0.0, 0.5}, Realization::Neumann};
    monotone = true;
    prev = 1e300;
    for (int j = 6; j <= 13; ++j) {
        const double y = std::pow(2.0, -j);
        const double du = (resolvent_at(nspec, 1.0, 1.5 * y, f, 1e-12)
                           - resolvent_at(nspec, 1.0, 0.75 * y, f, 1e-12)) / (0.75 * y);
        const double v = std::pow(y, nspec.op.c) * std::abs(du);
        if (j > 7 && v >= prev) monotone = false;
        prev = v;
        last = v;
    }
    rep.add_bound("neumann-flux-limit", last, 1e-3);
    rep.add_bound("neumann-monotone-tail", monotone ? 0.0 : 1.0, 0.5);
    return rep;
}

ProbeReport suite_trace_limit(const SuiteConfig& cfg)
{
    ProbeReport rep;
    rep.suite = "trace-limit";
    rep.config = ordered_json::object();
    (void)cfg;

    // E_n = || D_y (phi(n y) u) ||_{L^p_m} for u == 1 scales like
    // n^{1 - (m+1)/p}: it blows up iff (m+1)/p < 1 (a nonzero trace cannot
    // be cut off), and vanishes iff (m+1)/p > 1 (no trace obstruction).
    struct Case { double m, p; };
    for (const Case cs : {Case{0.0, 2.0}, Case{2.0, 2.0}, Case{-0.5, 1.5}, Case{3.0, 2.5}}) {
        const double q = (cs.m + 1.0) / cs.p;
        auto energy = [&](double n) {
            return std::pow(quad::integrate(
                [&](double y) {
                    const double d = n * sstep_d1(n * y - 1.0);
                    return std::pow(std::abs(d), cs.p) * std::pow(y, cs.m);
                },
                1.0 / n, 2.0 / n, {1e-9, 1e-15, 30}), 1.0 / cs.p);
        };
        const double e1 = energy(64.0), e2 = energy(1024.0);
        const double slope = std::log(e2 / e1) / std::log(1024.0 / 64.0);
        CheckRecord rec;
        rec.name = "cutoff-energy-exponent";
        rec.params = {{"m", cs.m}, {"p", cs.p}, {"q", q}};
        rec.measured = slope;
        rec.expected = 1.0 - q;
        rec.tolerance = 0.02;
        rec.pass = std::abs(slope - (1.0 - q)) < 0.02
            && ((q < 1.0) == (slope > 0.0));
        rep.add(std::move(rec));
    }
    return rep;
}

ProbeReport suite_closedness(const SuiteConfig& cfg)
{
    ProbeReport rep;
    rep.suite = "closedness";
    rep.config = {{"seed", cfg.seed}};

    struct Point { double b, c, m, p; };
    const Point pts[] = {{1.0, 0.0, 0.0, 2.0}, {0.0, 0.5, 0.5, 2.0}, {2.0, 1.0, 0.0, 3.0}};
    for (const auto& pt : pts) {
        KernelSpec spec{{pt.b, pt.c},
                        pt.b == 0.0 && pt.c > -1.0 ? Realization::Neumann : Realization::Standard,
                        600.0};
        ClosednessOptions opt;
        opt.N = 1;
        opt.nx = 16;
        opt.ny_geo = 96;
        opt.ny_uni = 160;
        opt.y_max = 14.0;
        opt.seed = cfg.seed;
        const ProbeReport sub = closedness_probe(spec, {2, pt.m, pt.p}, opt);
        for (const auto& c : sub.checks) {
            CheckRecord rec = c;
            rec.params["b"] = pt.b;
            rec.params["c"] = pt.c;
            rec.params["p"] = pt.p;
            rep.add(std::move(rec));
        }
    }

    // inadmissible index: concentration growth >= 10x
    const KernelSpec spec{{1.0, 0.0}, Realization::Standard};
    const auto bad = concentration_probe(spec, {1, 6.0, 2.0});
    CheckRecord rec;
    rec.name = "inadmissible-concentration-growth";
    rec.measured = bad.checks.back().measured;
    rec.expected = 10.0;
    rec.tolerance = 0.0;
    rec.pass = bad.checks.back().measured >= 10.0;
    rep.add(std::move(rec));
    return rep;
}

ProbeReport suite_rademacher(const SuiteConfig& cfg)
{
    ProbeReport rep;
    rep.suite = "rademacher";
    rep.config = {{"seed", cfg.seed}};

    const KernelSpec spec{{1.0, 0.0}, Realization::Standard};
    for (double p : {1.5, 2.0, 3.0}) {
        RademacherOptions opt;
        opt.family_size = 16;
        opt.seed = cfg.seed;
        const auto sub = rademacher_probe(spec, {1, 0.0, p}, opt);
        for (const auto& c : sub.checks) {
            if (c.name != "growth-per-doubling") continue;
            CheckRecord rec = c;
            rec.params["p"] = p;
            rep.add(std::move(rec));
        }
    }
    return rep;
}

ProbeReport suite_multiplier_decay(const SuiteConfig& cfg)
{
    ProbeReport rep;
    rep.suite = "multiplier-decay";
    rep.config = ordered_json::object();
    (void)cfg;

    const KernelSpec spec{{1.0, 0.0}, Realization::Standard};
    auto grid = default_grid(300, 1200, 1e-5, 10.0);
    GridFunction g = sample(grid, [](double y) { return bump(y, 1.0, 3.0); }, 0.0);

    // || xi D_y (1 + xi^2 - L_y)^{-1} g || stays bounded over the dyadic
    // frequency ladder (Mikhlin-type stability, not a proof)
    double worst = 0.0, first = 0.0;
    for (int j = 0; j <= 7; ++j) {
        const double xi = std::pow(2.0, j);
        const GridFunction v = apply_resolvent_grid(spec, 1.0 + xi * xi, g);
        GridFunction dv = v;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            std::size_t base = i >= 2 ? i - 2 : 0;
            base = std::min(base, grid.size() - 5);
            const auto w = fd_weights(grid[i], std::span(&grid[base], 5), 1);
            double acc = 0.0;
            for (int k2 = 0; k2 < 5; ++k2) acc += w[k2] * v.values[base + k2];
            dv.values[i] = xi * acc;
        }
        const double n = dv.norm(2.0);
        if (j == 0) first = n;
        worst = std::max(worst, n);
    }
    rep.add_bound("frequency-uniform-bound", worst / first, 5.0);
    return rep;
}

ProbeReport suite_plancherel(const SuiteConfig& cfg)
{
    ProbeReport rep;
    rep.suite = "plancherel";
    rep.config = ordered_json::object();
    (void)cfg;

    // p = 2, m = c: <f, u>_c = lambda ||u||_c^2 + a(u,u) with the form
    // a(u,u) = int (|grad_x u|^2 + |D_y u|^2 + b u^2/y^2) y^c
    const double c = 0.5, lambda = 1.0;
    const KernelSpec spec{{0.0, c}, Realization::Neumann};
    const int nx = 16;
    auto yg = default_grid(200, 800, 1e-5, 10.0);
    auto f = HalfSpaceField::zeros(1, {nx, 1}, {8.0, 8.0}, yg, c);
    for (int ix = 0; ix < nx; ++ix) {
        const double x = 8.0 * ix / nx;
        for (std::size_t iy = 0; iy < f.ny(); ++iy)
            f.at(ix, iy) = (1.0 + 0.5 * std::cos(2.0 * pi * x / 8.0)) * bump(yg[iy], 0.8, 2.5);
    }
    const HalfSpaceField u = elliptic_solve(spec, lambda, f);
    const auto grads = gradient_x(u);
    const HalfSpaceField uy = d_dy(u);

    auto inner = [&](const HalfSpaceField& a, const HalfSpaceField& b) {
        double acc = 0.0;
        const double dx = 8.0 / nx;
        for (std::size_t ix = 0; ix < a.x_count(); ++ix)
            for (std::size_t iy = 0; iy + 1 < a.ny(); ++iy) {
                const double w0 = std::pow(yg[iy], c), w1 = std::pow(yg[iy + 1], c);
                acc += 0.5 * (a.at(ix, iy) * b.at(ix, iy) * w0
                              + a.at(ix, iy + 1) * b.at(ix, iy + 1) * w1)
                    * (yg[iy + 1] - yg[iy]) * dx;
            }
        return acc;
    };
    const double lhs = inner(f, u);
    const double rhs = lambda * inner(u, u) + inner(grads[0], grads[0]) + inner(uy, uy);
    rep.add_close("energy-identity", lhs, rhs, 1e-3);
    rep.add_bound("form-positivity", lambda * inner(u, u) - lhs, 0.0);
    return rep;
}

} // namespace

const std::map<std::string, SuiteFn>& suite_registry()
{
    static const std::map<std::string, SuiteFn> reg = {
        {"params-identities", suite_params},
        {"specfun", suite_specfun},
        {"kernel-closed-form", suite_kernel_closed_form},
        {"kernel-symmetry", suite_kernel_symmetry},
        {"scaling", suite_scaling},
        {"conservation", suite_conservation},
        {"chapman-kolmogorov", suite_chapman_kolmogorov},
        {"laplace-transform", suite_laplace_transform},
        {"pde-residual", suite_pde_residual},
        {"gradient-fd", suite_gradient_fd},
        {"envelope", suite_envelope},
        {"norms", suite_norms},
        {"semigroup", suite_semigroup},
        {"resolvent", suite_resolvent},
        {"hardy", suite_hardy},
        {"sab", suite_sab},
        {"sab-threshold", suite_sab_threshold},
        {"muckenhoupt", suite_muckenhoupt},
        {"maximal", suite_maximal},
        {"rellich", suite_rellich},
        {"boundary-limits", suite_boundary_limits},
        {"trace-limit", suite_trace_limit},
        {"closedness", suite_closedness},
        {"rademacher", suite_rademacher},
        {"multiplier-decay", suite_multiplier_decay},
        {"plancherel", suite_plancherel},
    };
    return reg;
}

ProbeReport run_suite(const std::string& name, const SuiteConfig& cfg)
{
    const auto& reg = suite_registry();
    const auto it = reg.find(name);
    if (it == reg.end()) throw DomainError("unknown suite: " + name);
    return it->second(cfg);
}

} // namespace csk
