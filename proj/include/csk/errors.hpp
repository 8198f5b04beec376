#pragma once

#include <stdexcept>
#include <string>

namespace csk {

/// Invalid argument for a numerical routine (out-of-range order, negative
/// time, non-positive spatial coordinate, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Operator parameters incompatible with the requested realization
/// (e.g. Neumann with c <= -1, or a kernel request with D < 0).
class AdmissibilityError : public std::domain_error {
public:
    explicit AdmissibilityError(const std::string& what) : std::domain_error(what) {}
};

/// An adaptive quadrature failed to reach its tolerance.
class QuadratureFailure : public std::runtime_error {
public:
    explicit QuadratureFailure(const std::string& what) : std::runtime_error(what) {}
};

/// An envelope fit found a sample violating positivity.
class FitFailure : public std::runtime_error {
public:
    explicit FitFailure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace csk
