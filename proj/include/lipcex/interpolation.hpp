#pragma once

#include "lipcex/common.hpp"
#include "lipcex/piecewise_linear.hpp"
#include "lipcex/step_function.hpp"

namespace lipcex {

/// Ordering of the couple the K-functional is taken in. Both live on the same
/// measure space; K(t, f; A0, A1) = inf { ||f0||_A0 + t ||f1||_A1 }.
enum class CoupleOrder { l1_linf, linf_l1 };

/// Parameters of a Lions-Peetre space (A0, A1)_{theta,q}. lorentz_p() is the
/// exponent of the Lorentz space the couple identifies with: 1/(1-theta) for
/// (L1, Linf) and 1/theta for (Linf, L1).
struct InterpParams {
    double theta = 0.5;
    double q = 2.0;  // kInf for q = infinity
    CoupleOrder couple = CoupleOrder::linf_l1;

    void validate() const;
    double lorentz_p() const;
    static InterpParams for_lorentz(double p, double q, CoupleOrder couple);
};

/// t -> K(t, f; L1, Linf) as an explicit piecewise polynomial: on
/// [breaks[i], breaks[i+1]] it equals a + b t + c t^2, and it is constant
/// (= ||f||_1) beyond the last break. Step functions give linear segments,
/// piecewise linear functions give quadratic ones.
struct KProfile {
    struct Seg {
        double a = 0.0, b = 0.0, c = 0.0;
    };
    std::vector<double> breaks;  // starts at 0
    std::vector<Seg> segs;       // one per consecutive pair of breaks

    double eval(double t) const;
    /// K beyond the last break, i.e. the full L^1 mass.
    double total() const;
};

KProfile k_profile(const StepFunction& f);
KProfile k_profile(const PiecewiseLinear& f);

double k_functional(const StepFunction& f, double t, CoupleOrder couple);
double k_functional(const PiecewiseLinear& f, double t, CoupleOrder couple);

/// Lorentz quasinorm ||f||_{p,q}, p in (1, inf), q in [1, inf]. Computed in
/// closed form from the decreasing rearrangement; q == p reproduces norm_lp
/// bit for bit.
double lorentz_quasinorm(const StepFunction& f, double p, double q);

/// Lions-Peetre quasinorm ( integral (t^-theta K(t,f))^q dt/t )^(1/q),
/// sup_t t^-theta K(t, f) for q = inf. Exact per segment for integer q;
/// adaptive Simpson (1e-9 absolute target) otherwise.
double interp_norm(const StepFunction& f, const InterpParams& params);
double interp_norm(const PiecewiseLinear& f, const InterpParams& params);
double interp_norm(const KProfile& k, const InterpParams& params);

}  // namespace lipcex
