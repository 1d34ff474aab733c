#pragma once

#include <functional>
#include <vector>

#include "lipcex/common.hpp"

namespace lipcex {

// One constant piece on the half-open interval [lo, hi).
struct Piece {
    double lo = 0.0;
    double hi = 0.0;
    double value = 0.0;

    bool operator==(const Piece&) const = default;
};

/// A real-valued function on [0, inf) with finitely many constant pieces on
/// pairwise disjoint half-open intervals, identically zero elsewhere.
///
/// The representation is canonical: pieces are sorted, zero-valued or
/// zero-length pieces are dropped, and touching pieces with equal values are
/// merged. Two StepFunctions are equal (as L^1 elements) iff their canonical
/// piece lists are identical.
class StepFunction {
public:
    StepFunction() = default;
    explicit StepFunction(std::vector<Piece> pieces);

    static StepFunction indicator(double lo, double hi, double value = 1.0);
    static StepFunction zero() { return StepFunction{}; }

    const std::vector<Piece>& pieces() const { return pieces_; }
    bool is_zero() const { return pieces_.empty(); }

    /// Pointwise value at x (right-continuous by the [lo, hi) convention).
    double operator()(double x) const;

    /// Lebesgue measure of {f != 0}.
    double support_measure() const;
    /// Supremum of the support, 0 for the zero function.
    double support_end() const;
    /// Infimum of the support, 0 for the zero function.
    double support_begin() const;

    /// Signed integral over [0, inf).
    double integral() const;
    /// Signed integral over [a, b).
    double integral(double a, double b) const;
    /// Integral of |f| over [a, b).
    double abs_integral(double a, double b) const;

    StepFunction abs() const;
    StepFunction scaled(double c) const;

    StepFunction operator+(const StepFunction& g) const;
    StepFunction operator-(const StepFunction& g) const;

    bool operator==(const StepFunction& g) const = default;

    /// Pointwise combination h(x) = op(f(x), g(x)) on the common refinement.
    /// op(0, 0) must be 0 so that h is again finitely supported.
    static StepFunction combine(const StepFunction& f, const StepFunction& g,
                                const std::function<double(double, double)>& op);

    static StepFunction pointwise_min(const StepFunction& f, const StepFunction& g);
    static StepFunction pointwise_max(const StepFunction& f, const StepFunction& g);

    /// true iff f(x) <= g(x) everywhere (checked exactly, piece by piece).
    static bool pointwise_le(const StepFunction& f, const StepFunction& g);
    /// min over the common refinement of g - f; >= 0 iff f <= g pointwise.
    static double min_gap(const StepFunction& f, const StepFunction& g);

    /// |{ |f| > s }| for s >= 0.
    double measure_above(double s) const;

    double norm_l1() const;
    double norm_linf() const;
    /// (sum |v|^p len)^(1/p), accumulated in decreasing-rearrangement order so
    /// that it agrees bit-for-bit with lorentz_quasinorm(f, p, p). p > 0.
    double norm_lp(double p) const;

    /// The nonincreasing rearrangement of |f|, supported on [0, |supp f|).
    StepFunction decreasing_rearrangement() const;

private:
    void canonicalize();
    std::vector<Piece> pieces_;  // sorted, disjoint, nonzero values
};

}  // namespace lipcex
