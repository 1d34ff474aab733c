#include "lipcex/construction.hpp"

#include <algorithm>
#include <cmath>

namespace lipcex {

double Polygon::signed_area() const {
    double s = 0.0;
    const size_t n = vertices.size();
    for (size_t i = 0; i < n; ++i) {
        const auto& a = vertices[i];
        const auto& b = vertices[(i + 1) % n];
        s += a[0] * b[1] - b[0] * a[1];
    }
    return 0.5 * s;
}

namespace {

double orient(const std::array<double, 2>& a, const std::array<double, 2>& b,
              const std::array<double, 2>& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

bool on_segment(const std::array<double, 2>& a, const std::array<double, 2>& b,
                const std::array<double, 2>& q) {
    return std::min(a[0], b[0]) <= q[0] && q[0] <= std::max(a[0], b[0]) &&
           std::min(a[1], b[1]) <= q[1] && q[1] <= std::max(a[1], b[1]);
}

bool segments_cross(const std::array<double, 2>& a, const std::array<double, 2>& b,
                    const std::array<double, 2>& c, const std::array<double, 2>& d) {
    const double o1 = orient(a, b, c), o2 = orient(a, b, d);
    const double o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0)) && o1 != 0 && o2 != 0 &&
        o3 != 0 && o4 != 0)
        return true;
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

}  // namespace

bool Polygon::is_simple() const {
    const size_t n = vertices.size();
    if (n < 3) return false;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;  // adjacent around the wrap
            if (segments_cross(vertices[i], vertices[(i + 1) % n], vertices[j],
                               vertices[(j + 1) % n]))
                return false;
        }
    }
    return true;
}

namespace {

void check_tables(const ConstructionTables& t) {
    const int nmax = t.n_table_max;
    for (int n = 0; n < nmax; ++n) {
        if (!(t.h[static_cast<size_t>(n)] > 0.0))
            throw DomainError("build_tables: h must be strictly positive");
        if (!(t.h[static_cast<size_t>(n + 1)] < t.h[static_cast<size_t>(n)]))
            throw DomainError("build_tables: h must be strictly decreasing");
    }
    for (int n = 1; n <= nmax; ++n) {
        const double yn = t.y[static_cast<size_t>(n)];
        if (!(yn > 0.0) || !(yn >= t.y[1]))
            throw DomainError("build_tables: y must satisfy 0 < y_1 <= y_n");
        if (n < nmax && !(yn <= t.y[static_cast<size_t>(n + 1)]))
            throw DomainError("build_tables: y must be nondecreasing");
        const double slope = yn / t.h[static_cast<size_t>(n - 1)];
        const double want = t.m[static_cast<size_t>(n)] - t.m[static_cast<size_t>(n - 1)];
        if (rel_err(slope, want) > kTolIrrational)
            throw DomainError("build_tables: y_n/h_{n-1} != m_n - m_{n-1}");
        if (!(t.lambda[static_cast<size_t>(n)] <= std::exp2(n) - 1.0))
            throw DomainError("build_tables: lambda_n exceeds 2^n - 1");
    }
    const double sqrt2 = std::sqrt(2.0);
    if (rel_err(t.h[static_cast<size_t>(t.cap_n - 1)], (sqrt2 - 1.0) * t.w) > kTolDyadic)
        throw DomainError("build_tables: h_{N-1} != (sqrt(2)-1) w");
    if (rel_err(t.y[static_cast<size_t>(t.cap_n)], std::exp2(t.cap_n) / (1.0 + sqrt2)) >
        kTolDyadic)
        throw DomainError("build_tables: y_N != 2^N/(1+sqrt(2))");
}

}  // namespace

ConstructionTables build_tables(double p, int N, int n_table_max) {
    if (!(p > 1.0)) throw DomainError("build_tables: p must be in (1, inf)");
    if (N < 1) throw DomainError("build_tables: N must be >= 1");
    if (n_table_max < N)
        throw DomainError("build_tables: n_table_max must be >= N");
    const double top_exp = (static_cast<double>(n_table_max) + 1.0) * (p + 1.0);
    if (top_exp > 1000.0)
        throw DomainError("build_tables: 2^{n(p+1)} overflows; max feasible n_table_max is " +
                          std::to_string(static_cast<int>(1000.0 / (p + 1.0)) - 1));

    ConstructionTables t;
    t.p = p;
    t.cap_n = N;
    t.n_table_max = n_table_max;
    t.w = std::exp2(-p * N);

    const size_t size = static_cast<size_t>(n_table_max) + 1;
    t.m.assign(size, 0.0);
    t.h.assign(size, 0.0);
    t.y.assign(size, 0.0);
    t.lambda.assign(size, 0.0);

    for (int n = 1; n <= n_table_max; ++n)
        t.m[static_cast<size_t>(n)] =
            t.m[static_cast<size_t>(n - 1)] + std::exp2(n * (p + 1.0));
    for (int n = 0; n <= n_table_max; ++n) {
        // h_n = w (sqrt(1+z) - 1) with z = 2^{-p(n+1)} / w; the product form
        // avoids cancellation when z is small.
        const double z = std::exp2(p * (N - n - 1.0));
        t.h[static_cast<size_t>(n)] = t.w * z / (1.0 + std::sqrt(1.0 + z));
    }
    for (int n = 1; n <= n_table_max; ++n) {
        t.y[static_cast<size_t>(n)] =
            std::exp2(n - 1.0) / (1.0 + t.h[static_cast<size_t>(n - 1)] / (2.0 * t.w));
        t.lambda[static_cast<size_t>(n)] =
            t.lambda[static_cast<size_t>(n - 1)] + t.y[static_cast<size_t>(n)];
    }

    std::vector<double> sbreaks(size), svals(size);
    for (int n = 0; n <= n_table_max; ++n) {
        sbreaks[static_cast<size_t>(n)] = (std::exp2(n) - 1.0) * t.w;
        svals[static_cast<size_t>(n)] = t.lambda[static_cast<size_t>(n)];
    }
    t.gamma_inverse = PiecewiseLinear(std::move(sbreaks), std::move(svals));

    check_tables(t);
    return t;
}

int nu_index(const ConstructionTables& t, double tval) {
    if (tval == 0.0) return 0;
    if (!(tval > 0.0) || tval > t.lambda_max())
        throw DomainError("nu_index: t outside [0, lambda_max]");
    const auto it = std::lower_bound(t.lambda.begin(), t.lambda.end(), tval);
    return static_cast<int>(it - t.lambda.begin());
}

Polygon e_polygon(const ConstructionTables& t, double tval) {
    const int n = nu_index(t, tval);
    if (n == 0) throw DomainError("e_polygon: t must be positive");
    const double lam = t.lambda[static_cast<size_t>(n - 1)];
    const double hn = t.h[static_cast<size_t>(n - 1)];
    const double mn = t.m[static_cast<size_t>(n - 1)];
    return Polygon{{{0.0, lam},
                    {t.w, lam},
                    {t.w + hn, lam - mn * hn},
                    {t.w, tval},
                    {0.0, tval}}};
}

double e_slope(const ConstructionTables& t, double tval) {
    const int n = nu_index(t, tval);
    if (n == 0) throw DomainError("e_slope: t must be positive");
    const double lam = t.lambda[static_cast<size_t>(n - 1)];
    const double hn = t.h[static_cast<size_t>(n - 1)];
    const double mn = t.m[static_cast<size_t>(n - 1)];
    return (lam - mn * hn - tval) / hn;
}

double g_area(const ConstructionTables& t, double tval) {
    const int n = nu_index(t, tval);
    if (n == 0) return 0.0;
    const double lam = t.lambda[static_cast<size_t>(n - 1)];
    const double hn = t.h[static_cast<size_t>(n - 1)];
    return (std::exp2(n - 1.0) - 1.0) * t.w + (t.w + 0.5 * hn) * (tval - lam);
}

double gamma(const ConstructionTables& t, double s) {
    if (!(s >= 0.0) || s > t.area_max())
        throw DomainError("gamma: s outside [0, (2^n_table_max - 1) w]");
    return t.gamma_inverse(s);
}

PiecewiseLinear g_profile(const ConstructionTables& t, double tval) {
    const int n = nu_index(t, tval);
    if (n == 0) return PiecewiseLinear{};
    std::vector<double> xs{0.0, t.w};
    std::vector<double> ys{tval, tval};
    for (int k = n - 1; k >= 0; --k) {
        const double x = t.w + t.h[static_cast<size_t>(k)];
        if (x <= xs.back()) continue;  // sub-ulp node, merged away
        xs.push_back(x);
        ys.push_back(t.lambda[static_cast<size_t>(k)] -
                     t.m[static_cast<size_t>(k)] * t.h[static_cast<size_t>(k)]);
    }
    return PiecewiseLinear(std::move(xs), std::move(ys));
}

PiecewiseLinear s_n_profile(const ConstructionTables& t, double c) {
    const double cap = std::exp2(t.n_table_max) - 1.0;
    if (!(std::abs(c) <= cap))
        throw DomainError("s_n_profile: |c| exceeds table range 2^n_table_max - 1");
    return g_profile(t, gamma(t, std::abs(c) * t.w));
}

double lip_bound(double C, double p) {
    if (!(C > 0.0)) throw DomainError("lip_bound: C must be positive");
    if (!(p > 1.0)) throw DomainError("lip_bound: p must be in (1, inf)");
    const int n_c = std::max(1, static_cast<int>(std::ceil(std::log2(C + 1.0))));
    const double top = (static_cast<double>(n_c) + 1.0) * (p + 1.0);
    if (top > 1000.0) throw DomainError("lip_bound: overflow for this C");
    return (std::exp2(top) - std::exp2(p + 1.0)) / (std::exp2(p + 1.0) - 1.0);
}

T5Operator::T5Operator(double p, int max_terms, int n_table_max,
                       double required_exact_from)
    : p_(p) {
    if (max_terms < 1) throw DomainError("T5Operator: max_terms must be >= 1");
    auto fam = std::make_shared<IntervalFamily>(IntervalFamily::geometric(p));
    terms_ = std::min(max_terms, fam->max_live());
    auto tables = std::make_shared<std::vector<ConstructionTables>>();
    tables->reserve(static_cast<size_t>(terms_) + 1);
    tables->push_back(ConstructionTables{});  // unused slot 0
    for (int n = 1; n <= terms_; ++n)
        tables->push_back(build_tables(p, n, std::max(n, n_table_max)));
    family_ = std::move(fam);
    tables_ = std::move(tables);
    const auto ramp_width = [p](int n) {
        const double w = std::exp2(-p * (n + 1));
        return std::sqrt(w * w + w * std::exp2(-p));
    };
    exact_from_ = ramp_width(terms_);
    if (required_exact_from > 0.0 && exact_from_ >= required_exact_from) {
        int need = terms_;
        while (need < 100000 && ramp_width(need) >= required_exact_from) ++need;
        std::string msg = "T5Operator: max_terms=" + std::to_string(max_terms) +
                          " leaves the result exact only on [" +
                          std::to_string(exact_from_) + ", 1]; need " +
                          std::to_string(need) + " terms";
        if (need > family_->max_live()) msg += " (beyond the family's fp horizon)";
        throw DomainError(msg);
    }
}

const ConstructionTables& T5Operator::tables(int n) const {
    if (n < 1 || n > terms_) throw DomainError("T5Operator::tables: index out of range");
    return (*tables_)[static_cast<size_t>(n)];
}

PiecewiseLinear T5Operator::apply(const StepFunction& f) const {
    if (f.support_end() > 1.0)
        throw DomainError("T5Operator: f must be supported in [0, 1]");
    PiecewiseLinear acc;  // zero; the sup over an empty average set
    for (int n = 1; n <= terms_; ++n) {
        const double lo = family_->lo(n), hi = family_->hi(n);
        // divide by the nominal measure 2^-np of I_n, as in the defining
        // formula; this keeps the L1 estimate exact for every input
        const double c =
            f.abs_integral(lo, hi) / (*tables_)[static_cast<size_t>(n)].w;
        if (c == 0.0) continue;
        acc = PiecewiseLinear::sup(acc, s_n_profile((*tables_)[static_cast<size_t>(n)], c));
    }
    return acc;
}

Operator make_v(double p, int n_max) {
    auto fam = std::make_shared<IntervalFamily>(IntervalFamily::geometric(p));
    return Operator{"v", [fam, n_max](const StepFunction& f) {
                        return envelope_min(family_averages(f, *fam, n_max), v_envelope());
                    }};
}

T6Operator::T6Operator(double p, int max_terms, int n_table_max)
    : t5_(p, max_terms, n_table_max) {}

PiecewiseLinear T6Operator::apply(const StepFunction& f) const {
    if (f.support_end() > 1.0)
        throw DomainError("T6Operator: f must be supported in [0, 1]");
    const IntervalFamily& fam = t5_.family();
    PiecewiseLinear acc;
    for (int n = 1; n <= t5_.terms(); ++n) {
        const double lo = fam.lo(n), hi = fam.hi(n);
        const double w = t5_.tables(n).w;
        const double qf = std::abs(f.integral(lo, hi)) / w;
        const double c = std::min(qf, (std::exp2(n) - 1.0) * (fam.width(n) / w));
        if (c == 0.0) continue;
        acc = PiecewiseLinear::sup(acc, s_n_profile(t5_.tables(n), c));
    }
    return acc;
}

ProfileOperator make_t5(double p, int max_terms, int n_table_max) {
    auto op = std::make_shared<T5Operator>(p, max_terms, n_table_max);
    return ProfileOperator{
        "t5", [op](const StepFunction& f) { return op->apply(f); }, op->exact_from()};
}

ProfileOperator make_t6(double p, int max_terms, int n_table_max) {
    auto op = std::make_shared<T6Operator>(p, max_terms, n_table_max);
    return ProfileOperator{
        "t6", [op](const StepFunction& f) { return op->apply(f); },
        op->inner().exact_from()};
}

}  // namespace lipcex
