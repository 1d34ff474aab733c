#pragma once

#include <functional>
#include <memory>
#include <string>

#include "lipcex/interval_family.hpp"
#include "lipcex/sequence.hpp"
#include "lipcex/step_function.hpp"

namespace lipcex {

/// min(|f|, v) pointwise, v >= 0.
StepFunction lambda_v(const StepFunction& f, const StepFunction& v);
/// max(|f|, v) pointwise, v >= 0. Does not fix 0 (M_v(0) = v); centering
/// recovers m_tilde_v.
StepFunction m_v(const StepFunction& f, const StepFunction& v);
/// max(|f|, v) - v = (|f| - v)_+ pointwise, v >= 0.
StepFunction m_tilde_v(const StepFunction& f, const StepFunction& v);

/// Signed interval averages of f over a family. Averages are stored
/// explicitly up to explicit_max; every deeper interval lies inside the
/// region between f's last breakpoint and the family's accumulation point,
/// where f is constant, so all deeper averages equal tail_value.
struct FamilyAverages {
    const IntervalFamily* family = nullptr;
    int explicit_max = 0;
    std::vector<double> avg;  // avg[n] for n in [1, explicit_max]; avg[0] unused
    double tail_value = 0.0;

    double operator[](int n) const {
        return n <= explicit_max ? avg[static_cast<size_t>(n)] : tail_value;
    }
    /// Left end of the region covered by the constant tail.
    double tail_region_begin() const;
    double tail_region_end() const;
};

/// Averages of f (or of |f| when absolute) over every family interval.
/// Throws when pieces of f would require explicit averages past n_max.
FamilyAverages family_averages(const StepFunction& f, const IntervalFamily& family,
                               int n_max, bool absolute = false);

/// The conditional expectation Qf = sum_n avg_{I_n}(f) chi_{I_n}.
StepFunction cond_expectation(const StepFunction& f, const IntervalFamily& family,
                              int n_max);

/// A weight defined on family indices that eventually dominates any constant:
/// value(n) is the weight on I_n and stable_from(c) is an index s with
/// value(n) >= c for all n >= s.
struct IndexEnvelope {
    std::function<double(int)> value;
    std::function<int(double)> stable_from;
};

IndexEnvelope t1_envelope();  // 2^n / n^2
IndexEnvelope t2_envelope();  // n
IndexEnvelope v_envelope();   // 2^n - 1

/// min(|avg|, env) over the family (lambda composed with Q).
StepFunction envelope_min(const FamilyAverages& a, const IndexEnvelope& env);
/// (|avg| - env)_+ over the family (m-tilde composed with Q).
StepFunction envelope_deficit(const FamilyAverages& a, const IndexEnvelope& env);

/// A named nonlinear map of step functions. Every shipped operator fixes 0
/// and is 1-Lipschitz in both L^1 and L^inf.
struct Operator {
    std::string name;
    std::function<StepFunction(const StepFunction&)> apply;

    StepFunction operator()(const StepFunction& f) const { return apply(f); }
};

struct SequenceOperator {
    std::string name;
    std::function<Sequence(const Sequence&)> apply;

    Sequence operator()(const Sequence& a) const { return apply(a); }
};

Operator make_lambda(StepFunction v);
Operator make_m_tilde(StepFunction v);
Operator make_q_dyadic(int n_max = 64);

/// T1 = min(|Qf|, 2^n/n^2 on I_n), dyadic family.
Operator make_t1(int n_max = 64);
/// T2 = (|Qf| - n)_+ on I_n, dyadic family.
Operator make_t2(int n_max = 64);
/// T3 = T2 after T1.
Operator make_t3(int n_max = 64);

Operator compose(Operator outer, Operator inner);
/// f -> T(f) - T(0).
Operator center(Operator t);

/// The block weight v(n) = 1/k on 2^k <= n < 2^{k+1} (k >= 1), 0 for n < 2.
double t4_weight(int n);
/// T4: entrywise min(|alpha_n|, v(n)) on sequences.
SequenceOperator make_t4();
/// T4 acting on sequences embedded as step functions on unit cells.
Operator make_t4_embedded();

/// Threshold scan result: the bound holds for every N in the checked window
/// and, because the logarithmic gap is nondecreasing from monotone_from on,
/// for every larger N as well. minimal records that the convention's
/// predecessor fails.
struct ScanCertificate {
    int threshold = 0;
    int checked_from = 0;
    int checked_to = 0;
    int monotone_from = 0;
    bool minimal = false;
};

/// sigma_p: smallest integer with 2^{N/p} <= 2^N / N^2 for all N >= sigma_p.
ScanCertificate sigma_threshold(double p);
/// tau_p: smallest integer with N <= 2^{(N-1)/p} for all N > tau_p.
ScanCertificate tau_threshold(double p);
/// nu_p for T4: smallest integer with 2^{N/p} > N for all N > nu_p.
ScanCertificate nu4_threshold(double p);

}  // namespace lipcex
