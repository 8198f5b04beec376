#pragma once

#include "csk/halfline_ops.hpp"
#include "csk/report.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>

namespace csk {

/// lambda = 0 elliptic solve with a non-negligible zero x-frequency mode.
class SingularFrequency : public std::runtime_error {
public:
    explicit SingularFrequency(const std::string& what) : std::runtime_error(what) {}
};

/// Real scalar field on a periodic box in x times a half-line grid in y.
/// Layout: x indices outer (row-major over dimensions), y innermost.
struct HalfSpaceField {
    int N = 0;                        ///< number of x dimensions (0, 1 or 2)
    std::array<int, 2> nx = {1, 1};   ///< nodes per x dimension (powers of 2)
    std::array<double, 2> box = {16.0, 16.0}; ///< box side lengths
    std::vector<double> y_grid;
    std::vector<double> values;       ///< size = nx[0]*nx[1]*y_grid.size()
    double m = 0.0;

    std::size_t ny() const { return y_grid.size(); }
    std::size_t x_count() const { return static_cast<std::size_t>(nx[0]) * nx[1]; }
    double& at(std::size_t ix, std::size_t iy) { return values[ix * ny() + iy]; }
    double at(std::size_t ix, std::size_t iy) const { return values[ix * ny() + iy]; }

    /// L^p_m norm: rectangle rule in x (exact for periodic data), trapezoid
    /// with weight y^m in y.
    double norm(double p) const;

    /// CSV rows `x1[,x2],y,value`, 17 significant digits.
    void write_csv(std::ostream& os) const;

    static HalfSpaceField zeros(int N, std::array<int, 2> nx, std::array<double, 2> box,
                                std::vector<double> y_grid, double m);
};

/// u = (lambda - (Delta_x + L_y))^{-1} f by discrete Fourier transform in x
/// and the per-frequency half-line resolvent in y. lambda = 0 requires a
/// vanishing zero mode.
HalfSpaceField elliptic_solve(const KernelSpec& spec, double lambda,
                              const HalfSpaceField& f);

/// u = e^{t (Delta_x + L_y)} f: per-frequency Gaussian factor composed with
/// the one dimensional semigroup.
HalfSpaceField parabolic_step(const KernelSpec& spec, double t,
                              const HalfSpaceField& f);

/// Spectral Laplacian in x (for residuals and closedness ratios).
HalfSpaceField laplacian_x(const HalfSpaceField& u);

/// Spectral gradient in x; returns one field per x dimension.
std::vector<HalfSpaceField> gradient_x(const HalfSpaceField& u);

/// 4th-order finite-difference d/dy on the (nonuniform) y grid.
HalfSpaceField d_dy(const HalfSpaceField& u);

/// Finite-difference weights for the d-th derivative at point z from the
/// given nodes (Fornberg recursion).
std::vector<double> fd_weights(double z, std::span<const double> nodes, int d);

struct ClosednessOptions {
    int N = 1;
    int nx = 32;
    double box = 16.0;
    std::size_t ny_geo = 192;
    std::size_t ny_uni = 192;
    double y_min = 1e-5;
    double y_max = 20.0;
    int n_bumps = 8;
    std::uint64_t seed = 2024;
    double refine_drift_tol = 0.10;
};

/// Closedness ratios ||Delta_x u|| / ||L u||, ||L_y u|| / ||L u||, and when
/// the window allows them ||D_y grad_x u|| / ||L u||, ||grad_x u / y|| / ||L u||,
/// ||u/y^2|| / ||L u||, over resolvents of seeded random separable bumps,
/// with a 2x refinement stability check.
ProbeReport closedness_probe(const KernelSpec& spec, const SpaceParams& sp,
                             const ClosednessOptions& opt = {});

/// Concentrating-bump growth of ||u||/||f|| for the 1d resolvent; detects an
/// inadmissible homogeneity index by >= 10x growth.
ProbeReport concentration_probe(const KernelSpec& spec, const SpaceParams& sp,
                                int n_scales = 10);

enum class RademacherMode { Semigroup, Resolvent };

struct RademacherOptions {
    int family_size = 16;   ///< max family size (doubling ladder from 2)
    int n_signs = 64;       ///< vestigial for the square-function form
    RademacherMode mode = RademacherMode::Semigroup;
    std::uint64_t seed = 7;
    double growth_tol = 0.15;
};

/// Square-function ratios || (sum |T_i f_i|^2)^{1/2} || / || (sum |f_i|^2)^{1/2} ||
/// for random bump families and parameters, reported per family size with
/// the growth-per-doubling pass criterion.
ProbeReport rademacher_probe(const KernelSpec& spec, const SpaceParams& sp,
                             const RademacherOptions& opt = {});

} // namespace csk
