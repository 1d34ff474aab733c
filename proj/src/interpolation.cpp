#include "lipcex/interpolation.hpp"

#include <algorithm>
#include <cmath>

namespace lipcex {

void InterpParams::validate() const {
    if (!(theta > 0.0 && theta < 1.0)) throw DomainError("InterpParams: theta must be in (0,1)");
    if (!(q >= 1.0)) throw DomainError("InterpParams: q must be in [1, inf]");
}

double InterpParams::lorentz_p() const {
    return couple == CoupleOrder::l1_linf ? 1.0 / (1.0 - theta) : 1.0 / theta;
}

InterpParams InterpParams::for_lorentz(double p, double q, CoupleOrder couple) {
    if (!(p > 1.0)) throw DomainError("InterpParams: p must be in (1, inf)");
    InterpParams out;
    out.theta = couple == CoupleOrder::l1_linf ? 1.0 - 1.0 / p : 1.0 / p;
    out.q = q;
    out.couple = couple;
    return out;
}

double KProfile::eval(double t) const {
    if (t < 0.0) throw DomainError("KProfile::eval: t must be >= 0");
    if (segs.empty()) return 0.0;
    if (t >= breaks.back()) t = breaks.back();
    const auto it = std::upper_bound(breaks.begin(), breaks.end(), t);
    const size_t i = std::min(segs.size() - 1, static_cast<size_t>(it - breaks.begin() - 1));
    const Seg& s = segs[i];
    return s.a + t * (s.b + t * s.c);
}

double KProfile::total() const { return segs.empty() ? 0.0 : eval(breaks.back()); }

KProfile k_profile(const StepFunction& f) {
    KProfile k;
    k.breaks.push_back(0.0);
    const StepFunction r = f.decreasing_rearrangement();
    double acc = 0.0;
    for (const Piece& p : r.pieces()) {
        // K(t) = acc + v (t - lo) on [lo, hi]
        k.segs.push_back(KProfile::Seg{acc - p.value * p.lo, p.value, 0.0});
        k.breaks.push_back(p.hi);
        acc += p.value * (p.hi - p.lo);
    }
    return k;
}

KProfile k_profile(const PiecewiseLinear& f) {
    KProfile k;
    k.breaks.push_back(0.0);
    const PiecewiseLinear r = f.decreasing_rearrangement();
    const auto& xs = r.breakpoints();
    const auto& ys = r.values();
    double acc = 0.0;
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
        const double t0 = xs[i], t1 = xs[i + 1];
        const double s0 = ys[i];
        const double slope = (ys[i + 1] - s0) / (t1 - t0);
        // K(t) = acc + s0 (t - t0) + slope (t - t0)^2 / 2
        KProfile::Seg seg;
        seg.c = 0.5 * slope;
        seg.b = s0 - slope * t0;
        seg.a = acc - s0 * t0 + 0.5 * slope * t0 * t0;
        k.segs.push_back(seg);
        k.breaks.push_back(t1);
        acc += 0.5 * (s0 + ys[i + 1]) * (t1 - t0);
    }
    if (k.segs.empty()) k.breaks = {0.0};
    return k;
}

namespace {

double k_from_profile(const KProfile& k, double t, CoupleOrder couple) {
    if (couple == CoupleOrder::l1_linf) return k.eval(t);
    if (t == 0.0) return 0.0;
    return t * k.eval(1.0 / t);
}

}  // namespace

double k_functional(const StepFunction& f, double t, CoupleOrder couple) {
    if (t < 0.0) throw DomainError("k_functional: t must be >= 0");
    return k_from_profile(k_profile(f), t, couple);
}

double k_functional(const PiecewiseLinear& f, double t, CoupleOrder couple) {
    if (t < 0.0) throw DomainError("k_functional: t must be >= 0");
    return k_from_profile(k_profile(f), t, couple);
}

double lorentz_quasinorm(const StepFunction& f, double p, double q) {
    if (!(p > 1.0 && p < kInf)) throw DomainError("lorentz_quasinorm: p must be in (1, inf)");
    if (!(q >= 1.0)) throw DomainError("lorentz_quasinorm: q must be in [1, inf]");
    const StepFunction r = f.decreasing_rearrangement();
    if (q == kInf) {
        double m = 0.0;
        for (const Piece& pc : r.pieces()) m = std::max(m, pc.value * std::pow(pc.hi, 1.0 / p));
        return m;
    }
    if (q == p) {
        // same accumulation as norm_lp so the two agree exactly
        double s = 0.0;
        for (const Piece& pc : r.pieces()) s += std::pow(pc.value, p) * (pc.hi - pc.lo);
        return std::pow(s, 1.0 / p);
    }
    double s = 0.0;
    for (const Piece& pc : r.pieces())
        s += std::pow(pc.value, q) * (p / q) *
             (std::pow(pc.hi, q / p) - std::pow(pc.lo, q / p));
    return std::pow(s, 1.0 / q);
}

namespace {

// integral_u^v t^(e-1) dt, stable for small e; u may be 0 only when e > 0.
double power_integral(double u, double v, double e) {
    if (u == 0.0) {
        if (!(e > 0.0)) throw DomainError("power_integral: divergent at 0");
        return std::pow(v, e) / e;
    }
    if (e == 0.0) return std::log(v / u);
    const double lu = std::log(u), lv = std::log(v);
    if (std::abs(e) * std::max(std::abs(lu), std::abs(lv)) < 1e-8)
        return (lv - lu) * (1.0 + 0.5 * e * (lv + lu));
    return (std::pow(v, e) - std::pow(u, e)) / e;
}

// coefficients of (a + b t + c t^2)^q for integer q >= 1
std::vector<double> poly_power(double a, double b, double c, int q) {
    std::vector<double> acc{1.0};
    const std::vector<double> base{a, b, c};
    for (int k = 0; k < q; ++k) {
        std::vector<double> next(acc.size() + 2, 0.0);
        for (size_t i = 0; i < acc.size(); ++i)
            for (size_t j = 0; j < 3; ++j) next[i + j] += acc[i] * base[j];
        acc = std::move(next);
    }
    return acc;
}

template <typename F>
double simpson(const F& f, double a, double b) {
    return (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
}

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double tol, int depth) {
    const double whole = simpson(f, a, b);
    const double mid = 0.5 * (a + b);
    const double left = simpson(f, a, mid), right = simpson(f, mid, b);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, mid, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, mid, b, 0.5 * tol, depth - 1);
}

// sup over [u, v] of t^-theta (a + b t + c t^2)
double segment_sup(double u, double v, double theta, const KProfile::Seg& s) {
    std::vector<double> cands{v};
    if (u > 0.0) cands.push_back(u);
    // stationary points: (2-theta) c t^2 + (1-theta) b t - theta a = 0
    const double A = (2.0 - theta) * s.c, B = (1.0 - theta) * s.b, C = -theta * s.a;
    if (A == 0.0) {
        if (B != 0.0) cands.push_back(-C / B);
    } else {
        const double disc = B * B - 4.0 * A * C;
        if (disc >= 0.0) {
            const double r = std::sqrt(disc);
            cands.push_back((-B + r) / (2.0 * A));
            cands.push_back((-B - r) / (2.0 * A));
        }
    }
    double m = 0.0;
    for (double t : cands) {
        if (t < u || t > v || t <= 0.0) continue;
        const double kt = s.a + t * (s.b + t * s.c);
        if (kt > 0.0) m = std::max(m, std::pow(t, -theta) * kt);
    }
    return m;
}

}  // namespace

double interp_norm(const KProfile& k, const InterpParams& params) {
    params.validate();
    if (k.total() == 0.0) return 0.0;
    // (Linf, L1) reduces to (L1, Linf) with theta -> 1 - theta via t -> 1/t.
    const double theta =
        params.couple == CoupleOrder::l1_linf ? params.theta : 1.0 - params.theta;
    const double q = params.q;
    const double tend = k.breaks.back();

    if (q == kInf) {
        double m = std::pow(tend, -theta) * k.total();  // constant tail, decreasing
        for (size_t i = 0; i < k.segs.size(); ++i)
            m = std::max(m, segment_sup(k.breaks[i], k.breaks[i + 1], theta, k.segs[i]));
        return m;
    }

    const double beta = theta * q;
    double acc = std::pow(k.total(), q) * std::pow(tend, -beta) / beta;  // tail

    const bool integer_q = q == std::floor(q) && q <= 64.0;
    for (size_t i = 0; i < k.segs.size(); ++i) {
        const double u = k.breaks[i], v = k.breaks[i + 1];
        const KProfile::Seg& s = k.segs[i];
        if (integer_q) {
            const std::vector<double> coef = poly_power(s.a, s.b, s.c, static_cast<int>(q));
            for (size_t j = 0; j < coef.size(); ++j) {
                if (coef[j] == 0.0) continue;
                acc += coef[j] * power_integral(u, v, static_cast<double>(j) - beta);
            }
        } else {
            auto integrand = [&](double t) {
                const double kt = std::max(0.0, s.a + t * (s.b + t * s.c));
                return std::pow(kt, q) * std::pow(t, -beta - 1.0);
            };
            double lo = u;
            if (u == 0.0) {
                // K = b t + c t^2 near 0; integrate the leading powers exactly
                const double eps = std::min(v, 1e-7 * (std::abs(s.b) /
                                                       std::max(std::abs(s.c), 1e-300)));
                const double e0 = q - beta;
                acc += std::pow(s.b, q) *
                       (std::pow(eps, e0) / e0 +
                        q * (s.c / s.b) * std::pow(eps, e0 + 1.0) / (e0 + 1.0));
                lo = eps;
            }
            if (v > lo) acc += adaptive_simpson(integrand, lo, v, 1e-9, 48);
        }
    }
    return std::pow(acc, 1.0 / q);
}

double interp_norm(const StepFunction& f, const InterpParams& params) {
    return interp_norm(k_profile(f), params);
}

double interp_norm(const PiecewiseLinear& f, const InterpParams& params) {
    return interp_norm(k_profile(f), params);
}

}  // namespace lipcex
