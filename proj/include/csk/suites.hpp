#pragma once

#include "csk/report.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>

namespace csk {

/// Fully resolved configuration of one verification run. Unknown keys in
/// `overrides` are rejected by the suites that read them; the seed fully
/// determines every randomized draw.
struct SuiteConfig {
    std::uint64_t seed = 1;
    ordered_json overrides = ordered_json::object();

    double number(const std::string& key, double fallback) const
    {
        if (overrides.contains(key)) return overrides.at(key).get<double>();
        return fallback;
    }
};

using SuiteFn = std::function<ProbeReport(const SuiteConfig&)>;

/// Name -> suite map: one suite per family of identities and bounds
/// (kernels, classifiers, operators, probes, trace and boundary limits).
const std::map<std::string, SuiteFn>& suite_registry();

/// Runs a registered suite; throws DomainError for unknown names.
ProbeReport run_suite(const std::string& name, const SuiteConfig& cfg);

} // namespace csk
