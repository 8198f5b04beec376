#include "csk/maximal.hpp"
#include "csk/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace csk {

GridFunction maximal_function(const GridFunction& f, double measure_power)
{
    const std::size_t n = f.size();
    // prefix sums of int |f| dmu and int dmu, trapezoid per cell
    std::vector<double> mass(n, 0.0), vol(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) {
        const double h = f.grid[i] - f.grid[i - 1];
        const double w0 = std::pow(f.grid[i - 1], measure_power);
        const double w1 = std::pow(f.grid[i], measure_power);
        mass[i] = mass[i - 1] + 0.5 * (std::abs(f.values[i - 1]) * w0 + std::abs(f.values[i]) * w1) * h;
        vol[i] = vol[i - 1] + 0.5 * (w0 + w1) * h;
    }

    GridFunction out = f;
    // shrinking windows give back |f| at Lebesgue points
    for (std::size_t i = 0; i < n; ++i) out.values[i] = std::abs(f.values[i]);

    // M(i) = max over windows [y_j, y_k] with j <= i <= k of avg(j,k);
    // for each left endpoint j the inner max over k >= i is a single
    // backward sweep, O(n^2) overall.
    for (std::size_t j = 0; j + 1 < n; ++j) {
        double suffix = 0.0;
        for (std::size_t i = n; i-- > j;) {
            if (i >= j + 1)
                suffix = std::max(suffix, (mass[i] - mass[j]) / (vol[i] - vol[j]));
            out.values[i] = std::max(out.values[i], suffix);
        }
    }
    return out;
}

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

// int_u^v y^j dy for 0 <= u < v; +inf when divergent (u == 0, j <= -1).
double power_int(double j, double u, double v)
{
    if (u == 0.0 && j <= -1.0) return inf;
    if (j == -1.0) return std::log(v / u);
    const double e = j + 1.0;
    return (std::pow(v, e) - std::pow(u, e)) / e;
}

// int over the interval (x0 - r, x0 + r) in R of |y|^j dy.
double interval_abs_power(double j, double x0, double r)
{
    const double u = x0 - r, v = x0 + r;
    if (u >= 0.0) return power_int(j, u, v);
    if (v <= 0.0) return power_int(j, -v, -u);
    const double left = power_int(j, 0.0, -u);
    const double right = power_int(j, 0.0, v);
    return left + right;
}

// int over the ball B(x0, r) in R^M (a = |x0|) of |y|^j dy, up to the
// dimensional constant sigma_{M-1} which cancels in A_p averages.
double ball_abs_power(int M, double j, double a, double r)
{
    if (M == 1) return interval_abs_power(j, a, r);
    double total = 0.0;
    if (r > a) {
        // full spheres up to radius r - a
        total += power_int(j + M - 1, 0.0, r - a);
        if (!std::isfinite(total)) return inf;
    }
    const double lo = std::abs(r - a), hi = r + a;
    if (a == 0.0) return power_int(j + M - 1, 0.0, r);
    // fraction of the sphere of radius s inside the ball
    auto frac = [&](double s) {
        const double cosv = std::clamp((a * a + s * s - r * r) / (2.0 * a * s), -1.0, 1.0);
        if (M == 2) return std::acos(cosv) / 3.14159265358979323846;
        return 0.5 * (1.0 - cosv); // M == 3: spherical cap area fraction
    };
    if (lo == 0.0 && j + M - 1 <= -1.0) return inf;
    quad::Options opt;
    opt.rel_tol = 1e-9;
    opt.abs_tol = 0.0;
    opt.throw_on_failure = false;
    total += quad::integrate([&](double s) { return std::pow(s, j + M - 1) * frac(s); },
                             lo, hi, opt);
    return total;
}

} // namespace

double ap_constant_estimate(double k, int M, double m, double p, int n_balls,
                            std::uint64_t seed)
{
    if (!(p > 1.0)) throw DomainError("ap_constant_estimate: p must be > 1");
    if (M + m <= 0.0) throw DomainError("ap_constant_estimate: M + m must be > 0");
    if (M < 1 || M > 3) throw DomainError("ap_constant_estimate: M in {1,2,3}");

    const double dual = -k / (p - 1.0); // exponent of w^{1-p'}

    auto ap_of_ball = [&](double a, double r) {
        const double volume = ball_abs_power(M, m, a, r);
        const double first = ball_abs_power(M, k + m, a, r);
        const double second = ball_abs_power(M, dual + m, a, r);
        if (!std::isfinite(first) || !std::isfinite(second)) return inf;
        const double avg_w = first / volume;
        const double avg_dual = second / volume;
        return avg_w * std::pow(avg_dual, p - 1.0);
    };

    double best = 0.0;
    // deterministic balls at the origin across scales: out-of-class weights
    // diverge here
    for (int e = -6; e <= 2 && std::isfinite(best); ++e)
        best = std::max(best, ap_of_ball(0.0, std::pow(10.0, e)));

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int i = 0; i < n_balls && std::isfinite(best); ++i) {
        const double a = std::pow(10.0, -6.0 + 8.0 * uni(rng));
        const double r = std::pow(10.0, -6.0 + 8.0 * uni(rng));
        best = std::max(best, ap_of_ball(a, r));
    }
    return best;
}

} // namespace csk
