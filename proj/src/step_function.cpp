#include "lipcex/step_function.hpp"

#include <algorithm>
#include <cmath>

namespace lipcex {

StepFunction::StepFunction(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    canonicalize();
}

StepFunction StepFunction::indicator(double lo, double hi, double value) {
    return StepFunction({Piece{lo, hi, value}});
}

void StepFunction::canonicalize() {
    for (const Piece& p : pieces_) {
        if (!(std::isfinite(p.lo) && std::isfinite(p.hi) && std::isfinite(p.value)))
            throw DomainError("StepFunction: non-finite piece");
        if (p.lo < 0.0) throw DomainError("StepFunction: negative left endpoint");
        if (!(p.hi >= p.lo)) throw DomainError("StepFunction: hi < lo");
    }
    std::erase_if(pieces_, [](const Piece& p) { return p.hi == p.lo || p.value == 0.0; });
    std::sort(pieces_.begin(), pieces_.end(),
              [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
    for (size_t i = 0; i + 1 < pieces_.size(); ++i) {
        if (pieces_[i].hi > pieces_[i + 1].lo)
            throw DomainError("StepFunction: overlapping pieces");
    }
    std::vector<Piece> merged;
    merged.reserve(pieces_.size());
    for (const Piece& p : pieces_) {
        if (!merged.empty() && merged.back().hi == p.lo && merged.back().value == p.value)
            merged.back().hi = p.hi;
        else
            merged.push_back(p);
    }
    pieces_ = std::move(merged);
}

double StepFunction::operator()(double x) const {
    for (const Piece& p : pieces_) {
        if (x < p.lo) return 0.0;
        if (x < p.hi) return p.value;
    }
    return 0.0;
}

double StepFunction::support_measure() const {
    double m = 0.0;
    for (const Piece& p : pieces_) m += p.hi - p.lo;
    return m;
}

double StepFunction::support_end() const {
    return pieces_.empty() ? 0.0 : pieces_.back().hi;
}

double StepFunction::support_begin() const {
    return pieces_.empty() ? 0.0 : pieces_.front().lo;
}

double StepFunction::integral() const {
    double s = 0.0;
    for (const Piece& p : pieces_) s += p.value * (p.hi - p.lo);
    return s;
}

double StepFunction::integral(double a, double b) const {
    double s = 0.0;
    for (const Piece& p : pieces_) {
        const double lo = std::max(a, p.lo);
        const double hi = std::min(b, p.hi);
        if (hi > lo) s += p.value * (hi - lo);
    }
    return s;
}

double StepFunction::abs_integral(double a, double b) const {
    double s = 0.0;
    for (const Piece& p : pieces_) {
        const double lo = std::max(a, p.lo);
        const double hi = std::min(b, p.hi);
        if (hi > lo) s += std::abs(p.value) * (hi - lo);
    }
    return s;
}

StepFunction StepFunction::abs() const {
    std::vector<Piece> out = pieces_;
    for (Piece& p : out) p.value = std::abs(p.value);
    return StepFunction(std::move(out));
}

StepFunction StepFunction::scaled(double c) const {
    std::vector<Piece> out = pieces_;
    for (Piece& p : out) p.value *= c;
    return StepFunction(std::move(out));
}

StepFunction StepFunction::combine(const StepFunction& f, const StepFunction& g,
                                   const std::function<double(double, double)>& op) {
    std::vector<double> cuts;
    cuts.reserve(2 * (f.pieces_.size() + g.pieces_.size()));
    for (const Piece& p : f.pieces_) {
        cuts.push_back(p.lo);
        cuts.push_back(p.hi);
    }
    for (const Piece& p : g.pieces_) {
        cuts.push_back(p.lo);
        cuts.push_back(p.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Piece> out;
    out.reserve(cuts.empty() ? 0 : cuts.size() - 1);
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i], hi = cuts[i + 1];
        const double v = op(f(lo), g(lo));
        if (v != 0.0) out.push_back(Piece{lo, hi, v});
    }
    return StepFunction(std::move(out));
}

StepFunction StepFunction::operator+(const StepFunction& g) const {
    return combine(*this, g, [](double a, double b) { return a + b; });
}

StepFunction StepFunction::operator-(const StepFunction& g) const {
    return combine(*this, g, [](double a, double b) { return a - b; });
}

StepFunction StepFunction::pointwise_min(const StepFunction& f, const StepFunction& g) {
    return combine(f, g, [](double a, double b) { return std::min(a, b); });
}

StepFunction StepFunction::pointwise_max(const StepFunction& f, const StepFunction& g) {
    return combine(f, g, [](double a, double b) { return std::max(a, b); });
}

bool StepFunction::pointwise_le(const StepFunction& f, const StepFunction& g) {
    return min_gap(f, g) >= 0.0;
}

double StepFunction::min_gap(const StepFunction& f, const StepFunction& g) {
    std::vector<double> cuts;
    for (const Piece& p : f.pieces_) {
        cuts.push_back(p.lo);
        cuts.push_back(p.hi);
    }
    for (const Piece& p : g.pieces_) {
        cuts.push_back(p.lo);
        cuts.push_back(p.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    double gap = 0.0;  // off all pieces both vanish, so 0 is always a candidate
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
        gap = std::min(gap, g(cuts[i]) - f(cuts[i]));
    return gap;
}

double StepFunction::measure_above(double s) const {
    double m = 0.0;
    for (const Piece& p : pieces_)
        if (std::abs(p.value) > s) m += p.hi - p.lo;
    return m;
}

double StepFunction::norm_l1() const {
    double s = 0.0;
    for (const Piece& p : pieces_) s += std::abs(p.value) * (p.hi - p.lo);
    return s;
}

double StepFunction::norm_linf() const {
    double m = 0.0;
    for (const Piece& p : pieces_) m = std::max(m, std::abs(p.value));
    return m;
}

double StepFunction::norm_lp(double p) const {
    if (!(p > 0.0)) throw DomainError("norm_lp: p must be positive");
    const StepFunction r = decreasing_rearrangement();
    double s = 0.0;
    for (const Piece& q : r.pieces_) s += std::pow(q.value, p) * (q.hi - q.lo);
    return std::pow(s, 1.0 / p);
}

StepFunction StepFunction::decreasing_rearrangement() const {
    std::vector<Piece> by_value;
    by_value.reserve(pieces_.size());
    for (const Piece& p : pieces_) by_value.push_back(Piece{p.lo, p.hi, std::abs(p.value)});
    std::sort(by_value.begin(), by_value.end(),
              [](const Piece& a, const Piece& b) { return a.value > b.value; });
    std::vector<Piece> out;
    out.reserve(by_value.size());
    double at = 0.0;
    for (const Piece& p : by_value) {
        const double len = p.hi - p.lo;
        out.push_back(Piece{at, at + len, p.value});
        at += len;
    }
    return StepFunction(std::move(out));
}

}  // namespace lipcex
