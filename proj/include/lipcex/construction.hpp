#pragma once

#include <array>
#include <memory>

#include "lipcex/operators.hpp"
#include "lipcex/piecewise_linear.hpp"

namespace lipcex {

struct Polygon {
    std::vector<std::array<double, 2>> vertices;

    /// Shoelace formula; positive for counterclockwise orientation.
    double signed_area() const;
    /// No two non-adjacent edges intersect, adjacent ones only share a vertex.
    bool is_simple() const;
};

/// The per-(p, N) numerical tables behind the one-dimensional ramp operators:
///   w        = 2^{-Np}
///   m_n      = sum_{k<=n} 2^{k(p+1)},            m_0 = 0
///   h_n      = sqrt(w^2 + w 2^{-p(n+1)}) - w     (positive, decreasing)
///   y_n      = 2^{n-1} / (1 + h_{n-1}/(2w))
///   lambda_n = y_1 + ... + y_n,                  lambda_0 = 0
/// together with the piecewise-affine inverse gamma of t -> |G(t)|, built by
/// inverting the breakpoint list ((2^n - 1) w, lambda_n).
struct ConstructionTables {
    double p = 2.0;
    int cap_n = 1;  // the N fixing w
    double w = 0.0;
    int n_table_max = 0;
    std::vector<double> m;       // m[0..n_table_max]
    std::vector<double> h;       // h[0..n_table_max]
    std::vector<double> y;       // y[1..n_table_max], y[0] unused
    std::vector<double> lambda;  // lambda[0..n_table_max]
    PiecewiseLinear gamma_inverse;

    double lambda_max() const { return lambda.back(); }
    double area_max() const { return gamma_inverse.breakpoints().back(); }
};

/// Builds and validates the tables; any failed invariant throws.
ConstructionTables build_tables(double p, int N, int n_table_max = 40);

/// The unique n with lambda_{n-1} < t <= lambda_n; nu(0) = 0.
int nu_index(const ConstructionTables& t, double tval);

/// The five-vertex slab polygon E(t) (rectangle plus right triangle, top
/// lowered to height t), counterclockwise.
Polygon e_polygon(const ConstructionTables& t, double tval);

/// Slope sigma(t) of the oblique top edge of E(t), from the table values:
/// (lambda_{nu-1} - m_{nu-1} h_{nu-1} - t) / h_{nu-1}. Satisfies
/// m_{nu-1} < |sigma(t)| < m_nu for interior t and |sigma| = m_nu at lambda_nu.
double e_slope(const ConstructionTables& t, double tval);

/// |G(t)| = (2^{nu-1} - 1) w + (w + h_{nu-1}/2)(t - lambda_{nu-1}).
double g_area(const ConstructionTables& t, double tval);

/// Inverse of g_area: g_area(gamma(s)) = s; 1/w-Lipschitz.
double gamma(const ConstructionTables& t, double s);

/// x -> sup { y : (x, y) in G(t) }: the upper profile of the stacked slabs.
/// Equals t on [0, w], has nodes (w + h_k, lambda_k - m_k h_k) for
/// k = nu(t)-1, ..., 0, and vanishes past w + h_0.
PiecewiseLinear g_profile(const ConstructionTables& t, double tval);

/// S_N(c chi_I) = g(., gamma(|c| w)) restricted to [0, 1].
PiecewiseLinear s_n_profile(const ConstructionTables& t, double c);

/// Lipschitz bound L(C, p) = m_{n_C}, n_C = ceil(log2(C + 1)), in closed form
/// (2^{(n_C+1)(p+1)} - 2^{p+1}) / (2^{p+1} - 1).
double lip_bound(double C, double p);

/// T5: f -> sup_N S_N(avg_{I_N} |f| chi_{I_N}) over the geometric family with
/// |I_N| = 2^{-Np}. The supremum is truncated to the first `max_terms` live
/// ramps; every omitted ramp is supported in [0, exact_from()), so the result
/// is exact on [exact_from(), 1].
class T5Operator {
public:
    /// required_exact_from > 0 demands exact_from() < required_exact_from and
    /// throws with the term count that would achieve it when max_terms cannot.
    explicit T5Operator(double p, int max_terms = 40, int n_table_max = 40,
                        double required_exact_from = 0.0);

    PiecewiseLinear apply(const StepFunction& f) const;
    PiecewiseLinear operator()(const StepFunction& f) const { return apply(f); }

    double p() const { return p_; }
    int terms() const { return terms_; }
    double exact_from() const { return exact_from_; }
    const IntervalFamily& family() const { return *family_; }
    const ConstructionTables& tables(int n) const;

private:
    double p_;
    int terms_;
    double exact_from_;
    std::shared_ptr<const IntervalFamily> family_;
    std::shared_ptr<const std::vector<ConstructionTables>> tables_;
};

/// V = min(|Qf|, 2^N - 1 on I_N) over the geometric family.
Operator make_v(double p, int n_max = 64);

/// T6 = T5 after V. V leaves each interval average inside the table range, so
/// the ramps are fed min(|avg_{I_N} f|, 2^N - 1) directly.
class T6Operator {
public:
    explicit T6Operator(double p, int max_terms = 40, int n_table_max = 40);

    PiecewiseLinear apply(const StepFunction& f) const;
    PiecewiseLinear operator()(const StepFunction& f) const { return apply(f); }

    const T5Operator& inner() const { return t5_; }

private:
    T5Operator t5_;
};

/// A named map from step functions to piecewise-linear profiles (T5, T6).
struct ProfileOperator {
    std::string name;
    std::function<PiecewiseLinear(const StepFunction&)> apply;
    double exact_from = 0.0;

    PiecewiseLinear operator()(const StepFunction& f) const { return apply(f); }
};

ProfileOperator make_t5(double p, int max_terms = 40, int n_table_max = 40);
ProfileOperator make_t6(double p, int max_terms = 40, int n_table_max = 40);

}  // namespace lipcex
