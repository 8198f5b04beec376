#include "csk/report.hpp"

#include <chrono>
#include <cmath>

namespace csk {

void ProbeReport::add_close(const std::string& name, double measured, double expected,
                            double rel_tol, ordered_json params)
{
    CheckRecord rec;
    rec.name = name;
    rec.params = std::move(params);
    rec.measured = measured;
    rec.expected = expected;
    rec.tolerance = rel_tol;
    const double scale = std::max(std::abs(expected), 1e-300);
    rec.pass = std::isfinite(measured) && std::abs(measured - expected) <= rel_tol * scale;
    checks.push_back(std::move(rec));
}

void ProbeReport::add_bound(const std::string& name, double measured, double bound,
                            ordered_json params)
{
    CheckRecord rec;
    rec.name = name;
    rec.params = std::move(params);
    rec.measured = measured;
    rec.expected = bound;
    rec.tolerance = 0.0;
    rec.pass = std::isfinite(measured) && measured <= bound;
    checks.push_back(std::move(rec));
}

ordered_json ProbeReport::to_json(bool with_timestamp) const
{
    ordered_json j;
    j["schema"] = 1;
    j["suite"] = suite;
    if (with_timestamp) {
        const auto now = std::chrono::system_clock::now().time_since_epoch();
        j["timestamp"] = std::chrono::duration_cast<std::chrono::milliseconds>(now).count();
    }
    j["config"] = config.is_null() ? ordered_json::object() : config;
    j["aggregate_pass"] = aggregate_pass();
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks) {
        ordered_json r;
        r["name"] = c.name;
        r["params"] = c.params.is_null() ? ordered_json::object() : c.params;
        r["measured"] = c.measured;
        if (c.expected) r["expected"] = *c.expected;
        r["tolerance"] = c.tolerance;
        r["pass"] = c.pass;
        arr.push_back(std::move(r));
    }
    j["checks"] = std::move(arr);
    return j;
}

} // namespace csk
