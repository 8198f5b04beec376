#pragma once

#include "csk/errors.hpp"

#include <optional>

namespace csk {

/// Coefficients of the one dimensional operator
///   L = D_yy + (c/y) D_y - b/y^2
/// on the half line. Plain data; everything else is derived on demand.
struct OperatorParams {
    double b = 0.0; ///< potential coefficient
    double c = 0.0; ///< drift coefficient

    /// D = b + ((c-1)/2)^2. Real indicial roots exist iff D >= 0.
    double discriminant() const
    {
        const double h = 0.5 * (c - 1.0);
        return b + h * h;
    }
};

/// Roots of the indicial equation -s^2 + (c-1)s + b = 0, s1 <= s2.
struct IndicialRoots {
    double D;
    double s1;
    double s2;
};

/// Ambient space L^p_m: measure y^m dy on the half line tensorized with
/// Lebesgue measure on R^{dim-1}.
struct SpaceParams {
    int dim = 1;    ///< ambient dimension M >= 1 (M = 1: half line)
    double m = 0.0; ///< weight power
    double p = 2.0; ///< Lebesgue exponent, 1 < p < inf

    /// Homogeneity index q = (m+1)/p, the single parameter deciding
    /// generation, uniqueness and domain shape.
    double homogeneity_index() const { return (m + 1.0) / p; }
};

/// Open interval (lo, hi).
struct Interval {
    double lo;
    double hi;
    bool contains(double x) const { return lo < x && x < hi; }
};

/// nullopt iff D < 0 (negative discriminant: classification-only regime).
std::optional<IndicialRoots> indicial_roots(const OperatorParams& op);

/// Admissibility window (s1, s2+2) for the homogeneity index (m+1)/p.
/// nullopt iff D < 0.
std::optional<Interval> generation_interval(const OperatorParams& op);

struct Classification {
    bool maximal = false;          ///< L_max generates: s1 < q <= s2
    bool minimal = false;          ///< L_min generates: s1+2 <= q < s2+2
    bool unique = false;           ///< only one generating realization
    bool alternate_exists = false; ///< 0 < D < 1 and s2 < q < s1+2
};

enum class ClassifyStatus { Ok, NegativeDiscriminant, OutsideGenerationWindow };

struct ClassifyResult {
    ClassifyStatus status = ClassifyStatus::Ok;
    Classification value{};
};

/// Which realizations of L generate a semigroup in L^p_m, and whether the
/// generating realization is unique.
ClassifyResult classify_realization(const OperatorParams& op, const SpaceParams& sp);

/// Similarity u -> y^k u: transformed coefficients and weight such that the
/// transformed problem is isometrically equivalent. Roots shift by k, the
/// discriminant is preserved.
struct SimilarityResult {
    OperatorParams op;
    SpaceParams sp;
};
SimilarityResult similarity_shift(const OperatorParams& op, const SpaceParams& sp, double k);

/// Rellich inequality data in L^p (Lebesgue measure):
///   || y^-2 u ||_p <= C || L u ||_p  fails exactly when b lies on the
/// critical parabola P_p. The sharp constant 1/(b+gamma_p) is known when
/// s1+2 < 1/p < s2+2, and left unset otherwise.
struct RellichConstants {
    double gamma_p = 0.0;
    double parabola_vertex = 0.0; ///< -gamma_p, the real point of P_p
    bool degenerate_axis = false; ///< 3 - 2/p + c == 0: P_p collapses to a half line
    bool in_parabola = false;
    std::optional<double> best_constant;
};
RellichConstants rellich_constants(const OperatorParams& op, const SpaceParams& sp);

struct MuckenhouptResult {
    bool in_ap = false;
    std::optional<bool> in_rh; ///< set iff a reverse Holder order was supplied
};

/// Membership of w(y) = |y|^k in A_p(mu_m) on R^M, mu_m = |y|^m dy, and in
/// A_p intersect RH_r when r is given. Requires M + m > 0.
MuckenhouptResult muckenhoupt_radial(int M, double m, double k, double p,
                                     std::optional<double> r = std::nullopt);

enum class HardyKind { H1, H2 };

/// Operator norm of the Hardy averaging operator H1/H2 on L^p_m, or nullopt
/// when the operator is unbounded. H1 needs c+1 > (m+1)/p, H2 the reverse
/// strict inequality.
std::optional<double> hardy_constant(double c, const SpaceParams& sp, HardyKind which);

} // namespace csk
