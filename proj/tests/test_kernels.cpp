#include <doctest.h>

#include "csk/kernels.hpp"
#include "csk/quadrature.hpp"

#include <cmath>
#include <random>

using namespace csk;

namespace {

constexpr double pi = 3.14159265358979323846;

// c = 0 Neumann collapses to the reflected Gaussian (oracle).
double reflected_gauss(double t, double y, double rho)
{
    const double a = std::exp(-(y - rho) * (y - rho) / (4.0 * t));
    const double b = std::exp(-(y + rho) * (y + rho) / (4.0 * t));
    return (a + b) / std::sqrt(4.0 * pi * t);
}

double anti_reflected_gauss(double t, double y, double rho)
{
    const double a = std::exp(-(y - rho) * (y - rho) / (4.0 * t));
    const double b = std::exp(-(y + rho) * (y + rho) / (4.0 * t));
    return (a - b) / std::sqrt(4.0 * pi * t);
}

const KernelSpec neumann0{{0.0, 0.0}, Realization::Neumann, 600.0};
const KernelSpec dirichlet0{{0.0, 0.0}, Realization::Dirichlet, 600.0};

} // namespace

TEST_CASE("closed-form collapse at c = 0")
{
    CHECK(heat_kernel(neumann0, 1.0, 1.0, 1.0)
          == doctest::Approx((1.0 + std::exp(-1.0)) / (2.0 * std::sqrt(pi))).epsilon(1e-12));
    CHECK(heat_kernel(dirichlet0, 1.0, 1.0, 1.0)
          == doctest::Approx((1.0 - std::exp(-1.0)) / (2.0 * std::sqrt(pi))).epsilon(1e-12));

    for (double t : {0.01, 0.5, 3.0, 100.0}) {
        for (double y : {0.05, 0.7, 2.0, 9.0}) {
            for (double rho : {0.1, 1.0, 5.0}) {
                CHECK(heat_kernel(neumann0, t, y, rho)
                      == doctest::Approx(reflected_gauss(t, y, rho)).epsilon(1e-10));
                CHECK(heat_kernel(dirichlet0, t, y, rho)
                      == doctest::Approx(anti_reflected_gauss(t, y, rho)).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("admissibility and domain errors")
{
    CHECK_THROWS_AS(heat_kernel({{0.0, -1.5}, Realization::Neumann}, 1, 1, 1),
                    AdmissibilityError);
    CHECK_THROWS_AS(heat_kernel({{0.0, 1.5}, Realization::Dirichlet}, 1, 1, 1),
                    AdmissibilityError);
    CHECK_THROWS_AS(heat_kernel({{-1.0, 1.0}, Realization::Standard}, 1, 1, 1),
                    AdmissibilityError);
    CHECK_THROWS_AS(heat_kernel({{2.0, 0.0}, Realization::Alternate}, 1, 1, 1),
                    AdmissibilityError); // D = 2.25 not in (0,1)
    CHECK_THROWS_AS(heat_kernel(neumann0, -1.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(heat_kernel(neumann0, 1.0, 1.0, 0.0), DomainError);
}

TEST_CASE("parabolic scaling p(s^2 t, s y, s rho) = p/s and the 1/2 rule")
{
    const KernelSpec specs[] = {
        neumann0,
        {{0.0, 0.4}, Realization::Dirichlet},
        {{1.0, 0.0}, Realization::Standard},
        {{0.2, 0.3}, Realization::Alternate},
    };
    for (const auto& spec : specs) {
        CHECK(heat_kernel(spec, 4.0, 2.0, 2.0)
              == doctest::Approx(0.5 * heat_kernel(spec, 1.0, 1.0, 1.0)).epsilon(1e-12));
        for (double s : {0.3, 2.0, 7.0}) {
            const double lhs = heat_kernel(spec, s * s * 0.7, s * 1.1, s * 0.4);
            const double rhs = heat_kernel(spec, 0.7, 1.1, 0.4) / s;
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }
}

TEST_CASE("weighted symmetry p(t,y,rho)/rho^c = p(t,rho,y)/y^c")
{
    const KernelSpec specs[] = {
        {{0.0, -0.5}, Realization::Neumann},
        {{0.0, 0.6}, Realization::Dirichlet},
        {{1.0, 0.8}, Realization::Standard},
        {{0.5, 0.0}, Realization::Standard},
    };
    for (const auto& spec : specs) {
        const double c = spec.op.c;
        for (double t : {0.1, 1.0, 10.0})
            for (double y : {0.2, 1.5})
                for (double rho : {0.7, 3.0}) {
                    const double lhs = std::pow(y, c) * heat_kernel(spec, t, y, rho);
                    const double rhs = std::pow(rho, c) * heat_kernel(spec, t, rho, y);
                    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
                }
    }
}

TEST_CASE("standard realization with b = 0 matches the pure Bessel kernels")
{
    // c < 1: sqrt(D) = (1-c)/2, the standard kernel is the Dirichlet one
    const KernelSpec l{{0.0, 0.3}, Realization::Standard};
    const KernelSpec d{{0.0, 0.3}, Realization::Dirichlet};
    CHECK(heat_kernel(l, 0.7, 1.2, 0.5)
          == doctest::Approx(heat_kernel(d, 0.7, 1.2, 0.5)).epsilon(1e-13));

    // and the alternate one is Neumann
    const KernelSpec a{{0.0, 0.3}, Realization::Alternate};
    const KernelSpec n{{0.0, 0.3}, Realization::Neumann};
    CHECK(heat_kernel(a, 0.7, 1.2, 0.5)
          == doctest::Approx(heat_kernel(n, 0.7, 1.2, 0.5)).epsilon(1e-13));
}

TEST_CASE("gradient kernel: closed forms and finite differences")
{
    // c = 0 Neumann at t = 1, y = rho = 1: -e^{-1}/(2 sqrt(pi))
    CHECK(heat_kernel_dy(neumann0, 1.0, 1.0, 1.0)
          == doctest::Approx(-std::exp(-1.0) / (2.0 * std::sqrt(pi))).epsilon(1e-11));

    // Dirichlet c = 0, y -> 0+: D_y p(1, 0, 1) = e^{-1/4}/(2 sqrt(pi))
    CHECK(heat_kernel_dy(dirichlet0, 1.0, 0.0, 1.0)
          == doctest::Approx(std::exp(-0.25) / (2.0 * std::sqrt(pi))).epsilon(1e-11));

    // FD agreement on 100 random tuples across realizations
    std::mt19937_64 rng(2027);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
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
        const double fd = (heat_kernel(spec, t, y + h, rho) - heat_kernel(spec, t, y - h, rho))
            / (2.0 * h);
        const double an = heat_kernel_dy(spec, t, y, rho);
        const double scale = std::max(std::abs(fd), heat_kernel(spec, t, y, rho) / y);
        CHECK(std::abs(an - fd) <= 1e-6 * scale);
    }
}

TEST_CASE("green function: closed form and lambda scaling")
{
    // c = 0 Dirichlet, lambda = 1: kernel = sinh(min) e^{-max}
    CHECK(green_function(dirichlet0, 1.0, 1.0, 2.0)
          == doctest::Approx(std::sinh(1.0) * std::exp(-2.0)).epsilon(1e-10));
    CHECK(green_function(dirichlet0, 1.0, 2.0, 1.0)
          == doctest::Approx(std::sinh(1.0) * std::exp(-2.0)).epsilon(1e-10));

    // K(lambda,y,rho) = lambda^{-1/2} K(1, sqrt(lambda) y, sqrt(lambda) rho)
    const KernelSpec specs[] = {neumann0, dirichlet0, {{1.0, 0.0}, Realization::Standard}};
    for (const auto& spec : specs)
        for (double lam : {0.25, 4.0, 50.0})
            for (double y : {0.3, 1.0})
                for (double rho : {0.8, 2.5}) {
                    const double s = std::sqrt(lam);
                    CHECK(green_function(spec, lam, y, rho)
                          == doctest::Approx(green_function(spec, 1.0, s * y, s * rho) / s)
                                 .epsilon(1e-10));
                }

    // symmetric after removing the rho^c factor
    const KernelSpec l{{1.0, 0.4}, Realization::Standard};
    const double c = l.op.c;
    for (double y : {0.5, 1.7})
        for (double rho : {0.9, 3.1})
            CHECK(green_function(l, 1.0, y, rho) / std::pow(rho, c)
                  == doctest::Approx(green_function(l, 1.0, rho, y) / std::pow(y, c))
                         .epsilon(1e-11));

    CHECK_THROWS_AS(green_function(dirichlet0, 0.0, 1.0, 1.0), DomainError);
}

TEST_CASE("Laplace transform of the heat kernel is the green function")
{
    const KernelSpec specs[] = {
        {{0.0, 0.5}, Realization::Neumann},
        {{0.0, -0.3}, Realization::Dirichlet},
        {{1.0, 0.0}, Realization::Standard},
    };
    for (const auto& spec : specs) {
        for (double lam : {0.5, 1.0, 4.0}) {
            for (double y : {0.6, 1.3}) {
                for (double rho : {0.9, 2.0}) {
                    // integrate in u = log t; integrand decays at both ends
                    const double got = quad::integrate(
                        [&](double u) {
                            const double t = std::exp(u);
                            return t * std::exp(-lam * t) * heat_kernel(spec, t, y, rho);
                        },
                        -30.0, std::log(60.0 / lam), {1e-9, 1e-14, 40});
                    CHECK(got == doctest::Approx(green_function(spec, lam, y, rho))
                                     .epsilon(1e-6));
                }
            }
        }
    }
}

TEST_CASE("Chapman-Kolmogorov composition")
{
    const KernelSpec specs[] = {
        {{0.0, 0.5}, Realization::Neumann},
        {{0.0, -0.3}, Realization::Dirichlet},
        {{1.0, 0.0}, Realization::Standard},
    };
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (const auto& spec : specs) {
        for (int i = 0; i < 5; ++i) {
            const double t = 0.2 + uni(rng), s = 0.1 + uni(rng);
            const double y = 0.4 + 2.0 * uni(rng), w = 0.4 + 2.0 * uni(rng);
            const double window = std::sqrt(160.0 * std::max(t, s));
            const double hi = std::max(y, w) + window;
            const double got = quad::integrate_split(
                [&](double rho) {
                    return heat_kernel(spec, t, y, rho) * heat_kernel(spec, s, rho, w);
                },
                0.0, hi, {y, w}, {1e-9, 1e-16, 40});
            CHECK(got == doctest::Approx(heat_kernel(spec, t + s, y, w)).epsilon(1e-6));
        }
    }
}

TEST_CASE("conservation: the Neumann kernel has unit mass")
{
    for (double c : {-0.5, 0.0, 1.0, 3.0}) {
        const KernelSpec spec{{0.0, c}, Realization::Neumann};
        for (double t : {0.05, 1.0, 20.0}) {
            for (double y : {0.3, 1.0, 4.0}) {
                const double window = std::sqrt(160.0 * t);
                const double got = quad::integrate_split(
                    [&](double rho) { return heat_kernel(spec, t, y, rho); },
                    0.0, y + window, {y}, {1e-11, 1e-16, 40});
                CHECK(got == doctest::Approx(1.0).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("heat kernel solves the PDE (residual order >= 1.8)")
{
    const KernelSpec spec{{1.0, 0.5}, Realization::Standard};
    const double t = 0.8, y = 1.3, rho = 0.9;
    auto residual = [&](double h) {
        const double pt = (heat_kernel(spec, t + h, y, rho) - heat_kernel(spec, t - h, y, rho))
            / (2.0 * h);
        const double pyy = (heat_kernel(spec, t, y + h, rho) - 2.0 * heat_kernel(spec, t, y, rho)
            + heat_kernel(spec, t, y - h, rho)) / (h * h);
        const double py = (heat_kernel(spec, t, y + h, rho) - heat_kernel(spec, t, y - h, rho))
            / (2.0 * h);
        const double p = heat_kernel(spec, t, y, rho);
        return std::abs(pt - (pyy + spec.op.c / y * py - spec.op.b / (y * y) * p));
    };
    const double r1 = residual(1e-3);
    const double r2 = residual(5e-4);
    const double order = std::log2(r1 / r2);
    CHECK(order > 1.8);
    CHECK(order < 2.3);
}

TEST_CASE("y = 0 limits")
{
    // Neumann: finite positive limit
    const double v = heat_kernel({{0.0, 0.5}, Realization::Neumann}, 1.0, 0.0, 1.0);
    CHECK(std::isfinite(v));
    CHECK(v > 0.0);
    CHECK(v == doctest::Approx(heat_kernel({{0.0, 0.5}, Realization::Neumann}, 1.0, 1e-9, 1.0))
                   .epsilon(1e-6));

    // Dirichlet: zero limit
    CHECK(heat_kernel({{0.0, 0.5}, Realization::Dirichlet}, 1.0, 0.0, 1.0) == 0.0);

    // Standard with s1 > 0 blows up like y^{-s1}
    const KernelSpec blow{{-0.5, 3.0}, Realization::Standard}; // D = 0.5, s1 = 1 - sqrt(.5) > 0
    CHECK(std::isinf(heat_kernel(blow, 1.0, 0.0, 1.0)));
}

TEST_CASE("envelope exponents and fitted constants")
{
    // Neumann c=0 is the reflected Gaussian: envelope constant <= 1/sqrt(pi)
    // against kappa = 4.5 (and > 0.5/sqrt(pi), since the bound is attained
    // near y = rho)
    auto fit = envelope_check(neumann0, 4.5, false, 20000);
    CHECK(fit.max_ratio <= 1.0 / std::sqrt(pi) * 1.0001);
    CHECK(fit.max_ratio > 0.5 / std::sqrt(pi));
    CHECK(fit.positive);

    // exponent table
    auto e = envelope({{0.0, 0.5}, Realization::Neumann});
    CHECK(e.a_y == 0.0);
    CHECK(e.a_rho == 0.5);
    e = envelope({{0.0, 0.5}, Realization::Dirichlet}, 4.5, true);
    CHECK(e.a_y == doctest::Approx(-0.5));
    CHECK(e.a_rho == 1.0);
    e = envelope({{1.0, 0.0}, Realization::Standard});
    const auto roots = indicial_roots({1.0, 0.0});
    CHECK(e.a_y == doctest::Approx(-roots->s1));
    CHECK(e.a_rho == doctest::Approx(-roots->s1 + 0.0));

    // kernel and gradient envelopes hold with a stable constant for the
    // full operator
    const KernelSpec l{{1.0, 0.5}, Realization::Standard};
    auto fk = envelope_check(l, 4.5, false, 20000);
    CHECK(fk.max_ratio < 10.0);
    auto fg = envelope_check(l, 4.5, true, 20000);
    CHECK(fg.max_ratio < 50.0);
    // doubling the sample count moves the fit by < 5%
    auto fk2 = envelope_check(l, 4.5, false, 40000);
    CHECK(fk2.max_ratio <= fk.max_ratio * 1.05);
}

TEST_CASE("product kernel")
{
    const KernelSpec spec{{1.0, 0.0}, Realization::Standard};
    CHECK(product_kernel(spec, 0.7, {}, 1.1, {}, 0.8)
          == doctest::Approx(heat_kernel(spec, 0.7, 1.1, 0.8)).epsilon(1e-15));

    const double x[1] = {0.3}, same[1] = {0.3};
    CHECK(product_kernel(spec, 0.7, std::span(x, 1), 1.1, std::span(same, 1), 0.8)
          == doctest::Approx(heat_kernel(spec, 0.7, 1.1, 0.8)
                             / std::sqrt(4.0 * pi * 0.7)).epsilon(1e-13));

    // total mass over (x2, y2) is 1 for Neumann: Gaussian mass times the
    // conservation of the 1d kernel
    const KernelSpec n{{0.0, 0.5}, Realization::Neumann};
    const double t = 0.6;
    const double gx = quad::integrate(
        [&](double u) {
            const double z[1] = {0.0}, zz[1] = {u};
            return product_kernel(n, t, std::span(z, 1), 1.0, std::span(zz, 1), 1.0)
                / heat_kernel(n, t, 1.0, 1.0);
        },
        -std::sqrt(160.0 * t), std::sqrt(160.0 * t), {1e-10, 1e-15, 30});
    CHECK(gx == doctest::Approx(1.0).epsilon(1e-8));
}
