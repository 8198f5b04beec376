#pragma once

#include "csk/errors.hpp"

#include <functional>

namespace csk::quad {

struct Options {
    double rel_tol = 1e-10;
    double abs_tol = 0.0;
    int max_depth = 40;
    bool throw_on_failure = true;
};

/// Adaptive Gauss-Kronrod (G7,K15) on a finite interval. Endpoints are
/// never evaluated, so integrable endpoint singularities are fine.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opt = {});

/// Convenience: splits [a,b] at the given interior points first (kernel
/// kinks), then integrates each piece adaptively.
double integrate_split(const std::function<double(double)>& f, double a, double b,
                       std::initializer_list<double> splits, const Options& opt = {});

} // namespace csk::quad
