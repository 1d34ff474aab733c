#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace lipcex {

// Thrown for contract violations: bad arguments, out-of-range queries,
// representability limits (table overflow, family horizon).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

constexpr double kInf = std::numeric_limits<double>::infinity();

// Tolerances used by closed-form identity checks. Dyadic data is exact in
// binary64; the looser value is for quantities where sqrt(2) or quadrature
// enters.
constexpr double kTolDyadic = 1e-12;
constexpr double kTolIrrational = 1e-9;

inline bool nearly_equal(double a, double b, double rel_tol) {
    const double scale = std::max({std::abs(a), std::abs(b), 1.0});
    return std::abs(a - b) <= rel_tol * scale;
}

inline double rel_err(double got, double want) {
    const double scale = std::max(std::abs(want), 1.0);
    return std::abs(got - want) / scale;
}

}  // namespace lipcex
