#include "lipcex/operators.hpp"

#include <algorithm>
#include <cmath>

namespace lipcex {

namespace {

void require_nonnegative(const StepFunction& v, const char* who) {
    for (const Piece& p : v.pieces())
        if (p.value < 0.0) throw DomainError(std::string(who) + ": weight must be >= 0");
}

}  // namespace

StepFunction lambda_v(const StepFunction& f, const StepFunction& v) {
    require_nonnegative(v, "lambda_v");
    return StepFunction::combine(
        f, v, [](double a, double b) { return std::min(std::abs(a), b); });
}

StepFunction m_v(const StepFunction& f, const StepFunction& v) {
    require_nonnegative(v, "m_v");
    return StepFunction::combine(
        f, v, [](double a, double b) { return std::max(std::abs(a), b); });
}

StepFunction m_tilde_v(const StepFunction& f, const StepFunction& v) {
    require_nonnegative(v, "m_tilde_v");
    return StepFunction::combine(
        f, v, [](double a, double b) { return std::max(std::abs(a), b) - b; });
}

double FamilyAverages::tail_region_begin() const {
    if (family->kind() == IntervalFamily::Kind::dyadic) return 0.0;
    if (explicit_max >= family->max_live()) return family->accumulation_point();
    return family->lo(explicit_max + 1);
}

double FamilyAverages::tail_region_end() const {
    if (family->kind() == IntervalFamily::Kind::dyadic)
        return explicit_max >= family->max_live() ? 0.0 : family->hi(explicit_max + 1);
    return family->accumulation_point();
}

FamilyAverages family_averages(const StepFunction& f, const IntervalFamily& family,
                               int n_max, bool absolute) {
    if (n_max < 1) throw DomainError("family_averages: n_max must be >= 1");
    if (f.support_end() > 1.0)
        throw DomainError("family_averages: f must be supported in [0, 1]");

    FamilyAverages out;
    out.family = &family;
    if (f.is_zero()) return out;

    // Index of the first interval fully inside the region where f is constant
    // (between its breakpoint nearest the accumulation point and that point).
    int first_tail;
    double tail_value;
    if (family.kind() == IntervalFamily::Kind::dyadic) {
        const Piece& front = f.pieces().front();
        const double delta = front.lo > 0.0 ? front.lo : front.hi;
        tail_value = front.lo > 0.0 ? 0.0 : front.value;
        first_tail = 1;
        while (first_tail <= family.max_live() && family.hi(first_tail) > delta)
            ++first_tail;
    } else {
        const double acc = family.accumulation_point();
        double delta = 0.0;
        for (const Piece& p : f.pieces()) {
            if (p.lo < acc) delta = std::max(delta, p.lo);
            if (p.hi < acc) delta = std::max(delta, p.hi);
        }
        tail_value = f(delta);
        first_tail = 1;
        while (first_tail <= family.max_live() && family.lo(first_tail) < delta)
            ++first_tail;
    }
    if (first_tail > family.max_live())
        throw DomainError("family_averages: structure of f lies past the family's fp horizon");
    if (first_tail - 1 > n_max)
        throw DomainError("family_averages: n_max=" + std::to_string(n_max) +
                          " too small, need " + std::to_string(first_tail - 1) +
                          " explicit intervals");

    out.explicit_max = first_tail - 1;
    out.avg.assign(static_cast<size_t>(out.explicit_max) + 1, 0.0);
    for (int n = 1; n <= out.explicit_max; ++n) {
        const double lo = family.lo(n), hi = family.hi(n);
        const double mass = absolute ? f.abs_integral(lo, hi) : f.integral(lo, hi);
        out.avg[static_cast<size_t>(n)] = mass / family.width(n);
    }
    out.tail_value = absolute ? std::abs(tail_value) : tail_value;
    return out;
}

namespace {

StepFunction materialize(const FamilyAverages& a, int upto,
                         const std::function<double(int)>& value_on,
                         double tail_value) {
    const IntervalFamily& fam = *a.family;
    if (upto > fam.max_live())
        throw DomainError("materialize: family fp horizon exceeded");
    std::vector<Piece> pieces;
    pieces.reserve(static_cast<size_t>(upto) + 1);
    for (int n = upto; n >= 1; --n) {  // dyadic intervals descend; sort fixes order
        const double v = value_on(n);
        if (v != 0.0) pieces.push_back(Piece{fam.lo(n), fam.hi(n), v});
    }
    if (tail_value != 0.0) {
        const double lo = upto >= fam.max_live()
                              ? fam.accumulation_point()
                              : (fam.kind() == IntervalFamily::Kind::dyadic
                                     ? 0.0
                                     : fam.lo(upto + 1));
        const double hi = fam.kind() == IntervalFamily::Kind::dyadic
                              ? (upto >= fam.max_live() ? 0.0 : fam.hi(upto + 1))
                              : fam.accumulation_point();
        if (hi > lo) pieces.push_back(Piece{lo, hi, tail_value});
    }
    return StepFunction(std::move(pieces));
}

}  // namespace

StepFunction cond_expectation(const StepFunction& f, const IntervalFamily& family,
                              int n_max) {
    const FamilyAverages a = family_averages(f, family, n_max);
    return materialize(a, a.explicit_max, [&](int n) { return a[n]; }, a.tail_value);
}

IndexEnvelope t1_envelope() {
    IndexEnvelope e;
    e.value = [](int n) { return std::exp2(n) / (static_cast<double>(n) * n); };
    e.stable_from = [](double c) {
        int n = 3;  // 2^n/n^2 is increasing from n = 3 on
        while (std::exp2(n) / (static_cast<double>(n) * n) < c) ++n;
        return n;
    };
    return e;
}

IndexEnvelope t2_envelope() {
    IndexEnvelope e;
    e.value = [](int n) { return static_cast<double>(n); };
    e.stable_from = [](double c) { return std::max(1, static_cast<int>(std::ceil(c))); };
    return e;
}

IndexEnvelope v_envelope() {
    IndexEnvelope e;
    e.value = [](int n) { return std::exp2(n) - 1.0; };
    e.stable_from = [](double c) {
        int n = 1;
        while (std::exp2(n) - 1.0 < c) ++n;
        return n;
    };
    return e;
}

StepFunction envelope_min(const FamilyAverages& a, const IndexEnvelope& env) {
    const double c = std::abs(a.tail_value);
    const int upto = std::max(a.explicit_max, env.stable_from(c) - 1);
    return materialize(
        a, upto, [&](int n) { return std::min(std::abs(a[n]), env.value(n)); }, c);
}

StepFunction envelope_deficit(const FamilyAverages& a, const IndexEnvelope& env) {
    const double c = std::abs(a.tail_value);
    const int upto = std::max(a.explicit_max, env.stable_from(c) - 1);
    return materialize(
        a, upto, [&](int n) { return std::max(std::abs(a[n]) - env.value(n), 0.0); },
        0.0);
}

Operator make_lambda(StepFunction v) {
    require_nonnegative(v, "make_lambda");
    return Operator{"lambda",
                    [v = std::move(v)](const StepFunction& f) { return lambda_v(f, v); }};
}

Operator make_m_tilde(StepFunction v) {
    require_nonnegative(v, "make_m_tilde");
    return Operator{"mtilde",
                    [v = std::move(v)](const StepFunction& f) { return m_tilde_v(f, v); }};
}

Operator make_q_dyadic(int n_max) {
    return Operator{"q", [n_max](const StepFunction& f) {
                        return cond_expectation(f, IntervalFamily::dyadic(), n_max);
                    }};
}

Operator make_t1(int n_max) {
    return Operator{"t1", [n_max](const StepFunction& f) {
                        const IntervalFamily fam = IntervalFamily::dyadic();
                        return envelope_min(family_averages(f, fam, n_max), t1_envelope());
                    }};
}

Operator make_t2(int n_max) {
    return Operator{"t2", [n_max](const StepFunction& f) {
                        const IntervalFamily fam = IntervalFamily::dyadic();
                        return envelope_deficit(family_averages(f, fam, n_max),
                                                t2_envelope());
                    }};
}

Operator make_t3(int n_max) {
    Operator t = compose(make_t2(n_max), make_t1(n_max));
    t.name = "t3";
    return t;
}

Operator compose(Operator outer, Operator inner) {
    return Operator{outer.name + "." + inner.name,
                    [o = std::move(outer.apply), i = std::move(inner.apply)](
                        const StepFunction& f) { return o(i(f)); }};
}

Operator center(Operator t) {
    StepFunction at_zero = t.apply(StepFunction{});
    return Operator{t.name + ".centered",
                    [a = std::move(t.apply), z = std::move(at_zero)](
                        const StepFunction& f) { return a(f) - z; }};
}

double t4_weight(int n) {
    if (n < 2) return 0.0;
    const int k = static_cast<int>(std::floor(std::log2(static_cast<double>(n))));
    return 1.0 / k;
}

SequenceOperator make_t4() {
    return SequenceOperator{"t4", [](const Sequence& a) {
                                return a.map([](int n, double v) {
                                    return std::min(std::abs(v), t4_weight(n));
                                });
                            }};
}

Operator make_t4_embedded() {
    return Operator{"t4", [](const StepFunction& f) {
                        if (f.is_zero()) return f;
                        if (f.support_begin() < 1.0)
                            throw DomainError("t4: embedded sequences live on [1, inf)");
                        const double end = f.support_end();
                        std::vector<Piece> blocks;
                        for (int k = 1; std::exp2(k) < end; ++k)
                            blocks.push_back(Piece{std::exp2(k), std::exp2(k + 1), 1.0 / k});
                        return lambda_v(f, StepFunction(std::move(blocks)));
                    }};
}

namespace {

constexpr double kLn2 = 0.6931471805599453;

ScanCertificate scan_stable(const std::function<bool(int)>& holds, int monotone_from) {
    constexpr int kWindow = 64;
    int s = 1;
    while (s < 100000) {
        const int upto = std::max(s + kWindow - 1, monotone_from);
        int failed = 0;
        for (int n = s; n <= upto; ++n) {
            if (!holds(n)) {
                failed = n;
                break;
            }
        }
        if (failed == 0) {
            ScanCertificate cert;
            cert.checked_from = s;
            cert.checked_to = upto;
            cert.monotone_from = monotone_from;
            cert.minimal = s == 1 || !holds(s - 1);
            cert.threshold = s;
            return cert;
        }
        s = failed + 1;
    }
    throw DomainError("threshold scan did not stabilize");
}

}  // namespace

ScanCertificate sigma_threshold(double p) {
    if (!(p > 1.0)) throw DomainError("sigma_threshold: p must be > 1");
    const int monotone = static_cast<int>(std::ceil(2.0 / ((1.0 - 1.0 / p) * kLn2))) + 1;
    // 2^{N/p} <= 2^N / N^2  <=>  N^2 2^{N/p} <= 2^N; dyadic arithmetic keeps
    // the borderline cases exact (e.g. equality at p = 2, N = 16).
    return scan_stable(
        [p](int n) {
            const double nn = static_cast<double>(n);
            if (nn < 900.0) return nn * nn * std::exp2(nn / p) <= std::exp2(nn);
            return 2.0 * std::log2(nn) + nn / p <= nn;
        },
        monotone);
}

ScanCertificate tau_threshold(double p) {
    if (!(p > 1.0)) throw DomainError("tau_threshold: p must be > 1");
    const int monotone = static_cast<int>(std::ceil(p / kLn2)) + 1;
    ScanCertificate cert = scan_stable(
        [p](int n) {
            const double nn = static_cast<double>(n);
            const double e = (nn - 1.0) / p;
            return e >= 900.0 || nn <= std::exp2(e);
        },
        monotone);
    cert.threshold -= 1;  // bound is asserted for N > tau_p
    return cert;
}

ScanCertificate nu4_threshold(double p) {
    if (!(p > 1.0)) throw DomainError("nu4_threshold: p must be > 1");
    const int monotone = static_cast<int>(std::ceil(p / kLn2)) + 1;
    ScanCertificate cert = scan_stable(
        [p](int n) {
            const double nn = static_cast<double>(n);
            const double e = nn / p;
            return e >= 900.0 || std::exp2(e) > nn;
        },
        monotone);
    cert.threshold -= 1;  // bound is asserted for N > nu_p
    return cert;
}

}  // namespace lipcex
