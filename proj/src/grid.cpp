#include "csk/grid.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace csk {

std::vector<double> geometric_grid(double lo, double hi, std::size_t n)
{
    if (!(lo > 0.0 && hi > lo) || n < 2)
        throw DomainError("geometric_grid: need 0 < lo < hi, n >= 2");
    std::vector<double> g(n);
    const double step = std::log(hi / lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = lo * std::exp(step * static_cast<double>(i));
    g.back() = hi;
    return g;
}

std::vector<double> default_grid(std::size_t n_geo, std::size_t n_uni,
                                 double y_min, double y_max)
{
    std::vector<double> g = geometric_grid(y_min, 1.0, n_geo);
    const double h = (y_max - 1.0) / static_cast<double>(n_uni);
    for (std::size_t i = 1; i <= n_uni; ++i)
        g.push_back(1.0 + h * static_cast<double>(i));
    return g;
}

GridFunction::GridFunction(std::vector<double> g, std::vector<double> v, double m_)
    : grid(std::move(g)), values(std::move(v)), m(m_)
{
    if (grid.size() != values.size())
        throw DomainError("GridFunction: size mismatch");
    if (grid.empty()) throw DomainError("GridFunction: empty grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0)) throw DomainError("GridFunction: grid must be positive");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw DomainError("GridFunction: grid must be strictly increasing");
    }
}

double GridFunction::operator()(double y) const
{
    if (y <= grid.front()) return values.front();
    if (y >= grid.back()) return values.back();
    const auto it = std::upper_bound(grid.begin(), grid.end(), y);
    const std::size_t i = static_cast<std::size_t>(it - grid.begin());
    const double t = (y - grid[i - 1]) / (grid[i] - grid[i - 1]);
    return values[i - 1] + t * (values[i] - values[i - 1]);
}

double GridFunction::norm(double p) const
{
    if (grid.empty()) throw DomainError("norm: empty grid");
    if (std::isinf(p)) {
        double s = 0.0;
        for (double v : values) s = std::max(s, std::abs(v));
        return s;
    }
    if (!(p >= 1.0)) throw DomainError("norm: p must be >= 1 or inf");
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double f0 = std::pow(std::abs(values[i]), p) * std::pow(grid[i], m);
        const double f1 = std::pow(std::abs(values[i + 1]), p) * std::pow(grid[i + 1], m);
        acc += 0.5 * (f0 + f1) * (grid[i + 1] - grid[i]);
    }
    return std::pow(acc, 1.0 / p);
}

void GridFunction::write_csv(std::ostream& os) const
{
    os << "y,value\n";
    os.precision(17);
    for (std::size_t i = 0; i < grid.size(); ++i)
        os << grid[i] << ',' << values[i] << '\n';
}

GridFunction GridFunction::read_csv(std::istream& is, double m)
{
    std::string line;
    if (!std::getline(is, line) || line.rfind("y,value", 0) != 0)
        throw DomainError("read_csv: missing header");
    std::vector<double> g, v;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw DomainError("read_csv: bad row");
        g.push_back(std::stod(line.substr(0, comma)));
        v.push_back(std::stod(line.substr(comma + 1)));
    }
    return GridFunction{std::move(g), std::move(v), m};
}

} // namespace csk
