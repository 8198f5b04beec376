#pragma once

#include "csk/grid.hpp"

#include <cstdint>

namespace csk {

/// Uncentered maximal function over subintervals of the grid span with
/// respect to the measure |y|^measure_power dy, |f| taken piecewise linear.
/// O(n^2) via per-left-endpoint suffix maxima.
GridFunction maximal_function(const GridFunction& f, double measure_power);

inline GridFunction maximal_function(const GridFunction& f)
{
    return maximal_function(f, f.m);
}

/// Empirical A_p constant of the radial weight w = |y|^k on (R^M, |y|^m dy):
/// max over sampled balls of (avg_B w)(avg_B w^{1-p'})^{p-1}, the per-ball
/// averages evaluated in closed form (power antiderivatives; M = 2, 3 use a
/// 1d chord reduction). Returns +inf when a sampled ball has a divergent
/// average, which happens exactly for out-of-class k on balls at the origin.
double ap_constant_estimate(double k, int M, double m, double p, int n_balls,
                            std::uint64_t seed = 1);

} // namespace csk
