#pragma once

#include "csk/errors.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace csk {

/// Strictly increasing positive half-line grid.
std::vector<double> geometric_grid(double lo, double hi, std::size_t n);

/// Default grid per the library conventions: geometric nodes from y_min to
/// 1, then uniform nodes up to y_max. Resolves both the y^{-s} boundary
/// behaviour and Gaussian tails.
std::vector<double> default_grid(std::size_t n_geo = 512, std::size_t n_uni = 512,
                                 double y_min = 1e-6, double y_max = 50.0);

/// Sampled function on a half-line grid with the weight power of the ambient
/// L^p_m space it lives in.
struct GridFunction {
    std::vector<double> grid;   ///< strictly increasing, all > 0
    std::vector<double> values;
    double m = 0.0;             ///< weight power of the ambient measure y^m dy

    GridFunction() = default;
    GridFunction(std::vector<double> g, std::vector<double> v, double m_ = 0.0);

    std::size_t size() const { return grid.size(); }

    /// Piecewise-linear interpolant, endpoint values extended as constants
    /// beyond the grid.
    double operator()(double y) const;

    /// L^p_m norm by trapezoid rule on the grid; p = inf gives sup |f|.
    double norm(double p) const;

    /// Pointwise map.
    template <class F>
    GridFunction map(F&& f) const
    {
        GridFunction out = *this;
        for (auto& v : out.values) v = f(v);
        return out;
    }

    /// CSV with header `y,value`, 17 significant digits, \n line endings.
    void write_csv(std::ostream& os) const;
    static GridFunction read_csv(std::istream& is, double m = 0.0);
};

/// Samples a callable on a grid.
template <class F>
GridFunction sample(const std::vector<double>& grid, F&& f, double m = 0.0)
{
    std::vector<double> v(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) v[i] = f(grid[i]);
    return GridFunction{grid, std::move(v), m};
}

} // namespace csk
