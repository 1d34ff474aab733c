#include "lipcex/piecewise_linear.hpp"

#include <algorithm>
#include <cmath>

namespace lipcex {

PiecewiseLinear::PiecewiseLinear(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    if (xs_.empty() || xs_.size() != ys_.size())
        throw DomainError("PiecewiseLinear: breakpoint/value size mismatch");
    for (size_t i = 0; i < xs_.size(); ++i) {
        if (!std::isfinite(xs_[i]) || !std::isfinite(ys_[i]))
            throw DomainError("PiecewiseLinear: non-finite node");
        if (i > 0 && !(xs_[i] > xs_[i - 1]))
            throw DomainError("PiecewiseLinear: breakpoints not strictly increasing");
    }
}

double PiecewiseLinear::operator()(double x) const {
    if (x <= xs_.front()) return ys_.front();
    if (x >= xs_.back()) return ys_.back();
    const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    const size_t i = static_cast<size_t>(it - xs_.begin()) - 1;
    const double t = (x - xs_[i]) / (xs_[i + 1] - xs_[i]);
    return ys_[i] + t * (ys_[i + 1] - ys_[i]);
}

double PiecewiseLinear::integral(double a, double b) const {
    if (b < a) return -integral(b, a);
    double s = 0.0;
    // left constant extension
    if (a < xs_.front()) {
        const double hi = std::min(b, xs_.front());
        s += ys_.front() * (hi - a);
    }
    for (size_t i = 0; i + 1 < xs_.size(); ++i) {
        const double lo = std::max(a, xs_[i]);
        const double hi = std::min(b, xs_[i + 1]);
        if (hi > lo) s += 0.5 * (operator()(lo) + operator()(hi)) * (hi - lo);
    }
    if (b > xs_.back()) {
        const double lo = std::max(a, xs_.back());
        s += ys_.back() * (b - lo);
    }
    return s;
}

double PiecewiseLinear::sup_norm() const {
    double m = 0.0;
    for (double y : ys_) m = std::max(m, std::abs(y));
    return m;
}

namespace {

// Integral of |u|^p over one affine segment where u keeps a constant sign.
double abs_pow_segment(double x0, double x1, double u0, double u1, double p) {
    const double len = x1 - x0;
    if (len <= 0.0) return 0.0;
    const double a0 = std::abs(u0), a1 = std::abs(u1);
    if (p == 1.0) return 0.5 * (a0 + a1) * len;  // exact trapezoid
    if (a0 == a1) return std::pow(a0, p) * len;
    // the closed form cancels badly on near-flat segments; the midpoint rule
    // is then accurate to O((da/a)^2) relative
    if (std::abs(a1 - a0) <= 1e-6 * std::max(a0, a1))
        return std::pow(0.5 * (a0 + a1), p) * len;
    const double slope = (a1 - a0) / len;
    return (std::pow(a1, p + 1.0) - std::pow(a0, p + 1.0)) / ((p + 1.0) * slope);
}

}  // namespace

double PiecewiseLinear::lp_norm(double p) const {
    if (!(p >= 1.0)) throw DomainError("PiecewiseLinear::lp_norm: p must be >= 1");
    if (ys_.back() != 0.0)
        throw DomainError("PiecewiseLinear::lp_norm: trailing constant must be 0");
    double s = 0.0;
    if (xs_.front() > 0.0) s += std::pow(std::abs(ys_.front()), p) * xs_.front();
    for (size_t i = 0; i + 1 < xs_.size(); ++i) {
        const double x0 = xs_[i], x1 = xs_[i + 1];
        const double u0 = ys_[i], u1 = ys_[i + 1];
        if (u0 == 0.0 && u1 == 0.0) continue;
        if (u0 * u1 < 0.0) {
            const double xc = x0 + (x1 - x0) * (u0 / (u0 - u1));
            s += abs_pow_segment(x0, xc, u0, 0.0, p);
            s += abs_pow_segment(xc, x1, 0.0, u1, p);
        } else {
            s += abs_pow_segment(x0, x1, u0, u1, p);
        }
    }
    return std::pow(s, 1.0 / p);
}

double PiecewiseLinear::lipschitz_constant() const {
    double m = 0.0;
    for (size_t i = 0; i + 1 < xs_.size(); ++i)
        m = std::max(m, std::abs((ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i])));
    return m;
}

double PiecewiseLinear::max_value() const { return *std::max_element(ys_.begin(), ys_.end()); }
double PiecewiseLinear::min_value() const { return *std::min_element(ys_.begin(), ys_.end()); }

namespace {

std::vector<double> merged_breakpoints(const PiecewiseLinear& f, const PiecewiseLinear& g) {
    std::vector<double> xs;
    xs.reserve(f.breakpoints().size() + g.breakpoints().size());
    xs.insert(xs.end(), f.breakpoints().begin(), f.breakpoints().end());
    xs.insert(xs.end(), g.breakpoints().begin(), g.breakpoints().end());
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

}  // namespace

PiecewiseLinear PiecewiseLinear::operator-(const PiecewiseLinear& g) const {
    const std::vector<double> xs = merged_breakpoints(*this, g);
    std::vector<double> ys(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) ys[i] = operator()(xs[i]) - g(xs[i]);
    return PiecewiseLinear(xs, std::move(ys));
}

PiecewiseLinear PiecewiseLinear::operator+(const PiecewiseLinear& g) const {
    const std::vector<double> xs = merged_breakpoints(*this, g);
    std::vector<double> ys(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) ys[i] = operator()(xs[i]) + g(xs[i]);
    return PiecewiseLinear(xs, std::move(ys));
}

PiecewiseLinear PiecewiseLinear::scaled(double c) const {
    std::vector<double> ys = ys_;
    for (double& y : ys) y *= c;
    return PiecewiseLinear(xs_, std::move(ys));
}

PiecewiseLinear PiecewiseLinear::sup(const PiecewiseLinear& f, const PiecewiseLinear& g) {
    const std::vector<double> grid = merged_breakpoints(f, g);
    std::vector<double> xs, ys;
    xs.reserve(grid.size() + 4);
    ys.reserve(grid.size() + 4);
    auto push = [&](double x, double y) {
        if (!xs.empty() && x <= xs.back()) return;  // drop rounding duplicates
        xs.push_back(x);
        ys.push_back(y);
    };
    for (size_t i = 0; i < grid.size(); ++i) {
        const double x = grid[i];
        push(x, std::max(f(x), g(x)));
        if (i + 1 < grid.size()) {
            const double x1 = grid[i + 1];
            const double d0 = f(x) - g(x);
            const double d1 = f(x1) - g(x1);
            if (d0 * d1 < 0.0) {
                const double xc = x + (x1 - x) * (d0 / (d0 - d1));
                if (xc > x && xc < x1) push(xc, std::max(f(xc), g(xc)));
            }
        }
    }
    return PiecewiseLinear(std::move(xs), std::move(ys));
}

PiecewiseLinear PiecewiseLinear::sup(std::span<const PiecewiseLinear> fs) {
    if (fs.empty()) throw DomainError("PiecewiseLinear::sup: empty list");
    PiecewiseLinear acc = fs[0];
    for (size_t i = 1; i < fs.size(); ++i) acc = sup(acc, fs[i]);
    return acc;
}

PiecewiseLinear PiecewiseLinear::decreasing_rearrangement() const {
    if (ys_.back() != 0.0)
        throw DomainError("decreasing_rearrangement: trailing constant must be 0");
    struct Seg {
        double len, ylo, yhi;  // value range on the segment
        bool flat;
    };
    std::vector<Seg> segs;
    if (xs_.front() > 0.0) segs.push_back(Seg{xs_.front(), ys_.front(), ys_.front(), true});
    for (size_t i = 0; i + 1 < xs_.size(); ++i) {
        double a = ys_[i], b = ys_[i + 1];
        if (a < 0.0 || b < 0.0) throw DomainError("decreasing_rearrangement: negative values");
        if (a > b) std::swap(a, b);
        segs.push_back(Seg{xs_[i + 1] - xs_[i], a, b, a == b});
    }

    std::vector<double> levels = ys_;
    levels.push_back(0.0);
    std::sort(levels.begin(), levels.end(), std::greater<>());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    auto measure_above = [&](double s) {
        double m = 0.0;
        for (const Seg& g : segs) {
            if (g.flat) {
                if (g.ylo > s) m += g.len;
            } else if (s < g.ylo) {
                m += g.len;
            } else if (s < g.yhi) {
                m += g.len * (g.yhi - s) / (g.yhi - g.ylo);
            }
        }
        return m;
    };
    auto plateau_mass = [&](double s) {
        double m = 0.0;
        for (const Seg& g : segs)
            if (g.flat && g.ylo == s) m += g.len;
        return m;
    };

    std::vector<double> xs, ys;
    auto push = [&](double x, double y) {
        if (!xs.empty() && x <= xs.back()) return;
        xs.push_back(x);
        ys.push_back(y);
    };
    xs.push_back(0.0);
    ys.push_back(levels.front());
    for (double s : levels) {
        push(measure_above(s), s);
        if (s > 0.0) {
            const double mass = plateau_mass(s);
            if (mass > 0.0) push(measure_above(s) + mass, s);
        }
    }
    return PiecewiseLinear(std::move(xs), std::move(ys));
}

double pl_eval(const PiecewiseLinear& g, double x) { return g(x); }
double pl_integral(const PiecewiseLinear& g, double a, double b) { return g.integral(a, b); }
PiecewiseLinear pl_sup(std::span<const PiecewiseLinear> fs) { return PiecewiseLinear::sup(fs); }

}  // namespace lipcex
