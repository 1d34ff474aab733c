#pragma once

#include <span>
#include <vector>

#include "lipcex/common.hpp"

namespace lipcex {

/// Continuous piecewise-affine function given by strictly increasing
/// breakpoints and one node value per breakpoint. Beyond the last breakpoint
/// (and before the first) the function continues as a constant.
class PiecewiseLinear {
public:
    /// The zero function.
    PiecewiseLinear() : xs_{0.0}, ys_{0.0} {}
    PiecewiseLinear(std::vector<double> xs, std::vector<double> ys);

    const std::vector<double>& breakpoints() const { return xs_; }
    const std::vector<double>& values() const { return ys_; }
    size_t size() const { return xs_.size(); }

    double operator()(double x) const;

    /// Exact integral over [a, b] (trapezoids, constant extension outside).
    double integral(double a, double b) const;

    /// sup over [0, inf) of |f| (attained at a node or in the flat tails).
    double sup_norm() const;

    /// L^p norm over [0, inf), p >= 1. Requires the trailing constant to be 0;
    /// the leading constant is integrated from x = 0. Exact per segment: on a
    /// sign-constant affine segment |u|^p has antiderivative |u|^{p+1}/((p+1)u').
    double lp_norm(double p) const;

    /// Largest |slope| over all segments.
    double lipschitz_constant() const;

    double max_value() const;
    double min_value() const;

    PiecewiseLinear operator-(const PiecewiseLinear& g) const;
    PiecewiseLinear operator+(const PiecewiseLinear& g) const;
    PiecewiseLinear scaled(double c) const;

    bool operator==(const PiecewiseLinear&) const = default;

    /// Exact pointwise maximum. Breakpoints of the result are the union of the
    /// input breakpoints plus every pairwise segment crossing.
    static PiecewiseLinear sup(std::span<const PiecewiseLinear> fs);
    static PiecewiseLinear sup(const PiecewiseLinear& f, const PiecewiseLinear& g);

    /// The nonincreasing rearrangement, again piecewise linear. Requires
    /// min_value() >= 0 and a zero trailing constant.
    PiecewiseLinear decreasing_rearrangement() const;

private:
    std::vector<double> xs_;
    std::vector<double> ys_;
};

double pl_eval(const PiecewiseLinear& g, double x);
double pl_integral(const PiecewiseLinear& g, double a, double b);
PiecewiseLinear pl_sup(std::span<const PiecewiseLinear> fs);

}  // namespace lipcex
