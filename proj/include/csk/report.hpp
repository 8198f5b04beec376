#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace csk {

using ordered_json = nlohmann::ordered_json;

/// One measured quantity inside a verification suite.
struct CheckRecord {
    std::string name;
    ordered_json params;  ///< the inputs this check ran with
    double measured = 0.0;
    std::optional<double> expected;
    double tolerance = 0.0;
    bool pass = false;
};

/// Structured result of a verification suite. Serializes losslessly to
/// JSON; the aggregate flag is derived, never stored independently.
struct ProbeReport {
    std::string suite;
    std::vector<CheckRecord> checks;
    ordered_json config; ///< fully resolved configuration, for reproducibility

    bool aggregate_pass() const
    {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(CheckRecord rec) { checks.push_back(std::move(rec)); }

    /// Convenience for |measured - expected| <= tol * max(|expected|, floor).
    void add_close(const std::string& name, double measured, double expected,
                   double rel_tol, ordered_json params = {});

    /// Convenience for a boolean condition with a measured witness.
    void add_bound(const std::string& name, double measured, double bound,
                   ordered_json params = {});

    ordered_json to_json(bool with_timestamp = true) const;
};

} // namespace csk
