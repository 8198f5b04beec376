#include "csk/params.hpp"

#include <cmath>

namespace csk {

std::optional<IndicialRoots> indicial_roots(const OperatorParams& op)
{
    const double D = op.discriminant();
    if (D < 0.0) return std::nullopt;
    const double r = std::sqrt(D);
    const double mid = 0.5 * (op.c - 1.0);
    return IndicialRoots{D, mid - r, mid + r};
}

std::optional<Interval> generation_interval(const OperatorParams& op)
{
    const auto roots = indicial_roots(op);
    if (!roots) return std::nullopt;
    return Interval{roots->s1, roots->s2 + 2.0};
}

ClassifyResult classify_realization(const OperatorParams& op, const SpaceParams& sp)
{
    const auto roots = indicial_roots(op);
    if (!roots) return {ClassifyStatus::NegativeDiscriminant, {}};

    const double q = sp.homogeneity_index();
    const double s1 = roots->s1, s2 = roots->s2, D = roots->D;
    if (!(s1 < q && q < s2 + 2.0))
        return {ClassifyStatus::OutsideGenerationWindow, {}};

    Classification c;
    c.maximal = (s1 < q && q <= s2);
    c.minimal = (s1 + 2.0 <= q && q < s2 + 2.0);
    const bool gap = (D < 1.0) && (s2 < q && q < s1 + 2.0);
    c.unique = !gap;
    c.alternate_exists = (D > 0.0) && (D < 1.0) && (s2 < q && q < s1 + 2.0);
    return {ClassifyStatus::Ok, c};
}

SimilarityResult similarity_shift(const OperatorParams& op, const SpaceParams& sp, double k)
{
    OperatorParams t;
    t.b = op.b - k * (op.c + k - 1.0);
    t.c = op.c + 2.0 * k;
    SpaceParams s = sp;
    s.m = sp.m + k * sp.p;
    return {t, s};
}

RellichConstants rellich_constants(const OperatorParams& op, const SpaceParams& sp)
{
    const double p = sp.p;
    const double inv_p = 1.0 / p;
    const double inv_pp = 1.0 - inv_p; // 1/p'

    RellichConstants out;
    out.gamma_p = (inv_p - 2.0) * (inv_pp + op.c);
    out.parabola_vertex = -out.gamma_p;

    const auto roots = indicial_roots(op);
    const double axis = 3.0 - 2.0 * inv_p + op.c;
    out.degenerate_axis = (axis == 0.0);
    if (axis != 0.0) {
        // P_p meets the real line only at its vertex -gamma_p, i.e. at
        // 1/p = s1+2 or 1/p = s2+2.
        out.in_parabola = (op.b + out.gamma_p == 0.0);
    } else {
        // degenerate parabola: the half line (-inf, -gamma_p]
        out.in_parabola = (op.b + out.gamma_p <= 0.0);
    }
    if (roots && roots->s1 + 2.0 < inv_p && inv_p < roots->s2 + 2.0)
        out.best_constant = 1.0 / (op.b + out.gamma_p);
    return out;
}

MuckenhouptResult muckenhoupt_radial(int M, double m, double k, double p,
                                     std::optional<double> r)
{
    if (M + m <= 0.0) throw DomainError("muckenhoupt_radial: requires M + m > 0");
    if (!(p >= 1.0)) throw DomainError("muckenhoupt_radial: requires p >= 1");
    if (r && !(*r >= 1.0)) throw DomainError("muckenhoupt_radial: requires r >= 1");

    const double d = M + m;
    MuckenhouptResult out;
    out.in_ap = (-d < k) && (k < d * (p - 1.0));
    if (r) out.in_rh = (-d / *r < k) && (k < d * (p - 1.0));
    return out;
}

std::optional<double> hardy_constant(double c, const SpaceParams& sp, HardyKind which)
{
    const double q = sp.homogeneity_index();
    const double edge = c + 1.0;
    if (which == HardyKind::H1) {
        if (edge > q) return 1.0 / (edge - q);
        return std::nullopt;
    }
    if (edge < q) return 1.0 / (q - edge);
    return std::nullopt;
}

} // namespace csk
