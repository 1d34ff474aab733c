#pragma once

#include <vector>

#include "lipcex/common.hpp"

namespace lipcex {

/// A pairwise disjoint family of half-open intervals I_1, I_2, ... inside
/// [0, 1] with a closed-form measure rule.
///
/// dyadic:     I_n = [2^-n, 2^-n+1), |I_n| = 2^-n; the family descends toward
///             the accumulation point 0.
/// geometric:  |I_n| = 2^-np, packed left to right from 0 with no gaps; the
///             family ascends toward sum_k 2^-kp = 1/(2^p - 1) < 1.
///
/// Geometric endpoints are accumulated in binary64. The width of I_n is the
/// exact difference of consecutive stored endpoints (Sterbenz), which drops
/// below the closed form once 2^-np falls under one ulp of the accumulation
/// point; indices past that horizon are not live.
class IntervalFamily {
public:
    enum class Kind { dyadic, geometric };

    static IntervalFamily dyadic();
    static IntervalFamily geometric(double p);

    Kind kind() const { return kind_; }
    double exponent() const { return p_; }

    /// Largest index with a positive stored width.
    int max_live() const { return max_live_; }

    double lo(int n) const;
    double hi(int n) const;
    /// Exact stored width hi(n) - lo(n).
    double width(int n) const;
    /// Closed-form measure 2^-n or 2^-np.
    double measure_formula(int n) const;

    /// Limit point of the family: 0 (dyadic) or the converged right end
    /// (geometric).
    double accumulation_point() const;

    /// Interval index containing x, or 0 if x lies in no live interval.
    int index_of(double x) const;

private:
    IntervalFamily() = default;
    void check(int n) const;

    Kind kind_ = Kind::dyadic;
    double p_ = 0.0;
    int max_live_ = 0;
    std::vector<double> lo_;  // geometric only: lo_[n], n = 1..max_live_+1
};

}  // namespace lipcex
