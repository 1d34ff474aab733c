#include "lipcex/interval_family.hpp"

#include <cmath>

namespace lipcex {

namespace {
constexpr int kDyadicLive = 1070;  // 2^-n underflows past this
constexpr int kGeometricCap = 4096;
}  // namespace

IntervalFamily IntervalFamily::dyadic() {
    IntervalFamily f;
    f.kind_ = Kind::dyadic;
    f.max_live_ = kDyadicLive;
    return f;
}

IntervalFamily IntervalFamily::geometric(double p) {
    if (!(p > 1.0)) throw DomainError("IntervalFamily::geometric: p must be > 1");
    IntervalFamily f;
    f.kind_ = Kind::geometric;
    f.p_ = p;
    f.lo_.push_back(0.0);  // unused slot so lo_[n] is 1-based
    f.lo_.push_back(0.0);
    int n = 1;
    while (n < kGeometricCap) {
        const double left = f.lo_[static_cast<size_t>(n)];
        const double next = left + std::exp2(-p * n);
        if (next == left) break;  // width below one ulp: horizon reached
        f.lo_.push_back(next);
        ++n;
    }
    f.max_live_ = n - 1;
    return f;
}

void IntervalFamily::check(int n) const {
    if (n < 1 || n > max_live_)
        throw DomainError("IntervalFamily: index " + std::to_string(n) +
                          " outside live range [1, " + std::to_string(max_live_) + "]");
}

double IntervalFamily::lo(int n) const {
    check(n);
    if (kind_ == Kind::dyadic) return std::exp2(-n);
    return lo_[static_cast<size_t>(n)];
}

double IntervalFamily::hi(int n) const {
    check(n);
    if (kind_ == Kind::dyadic) return std::exp2(-n + 1);
    return lo_[static_cast<size_t>(n) + 1];
}

double IntervalFamily::width(int n) const { return hi(n) - lo(n); }

double IntervalFamily::measure_formula(int n) const {
    check(n);
    if (kind_ == Kind::dyadic) return std::exp2(-n);
    return std::exp2(-p_ * n);
}

double IntervalFamily::accumulation_point() const {
    if (kind_ == Kind::dyadic) return 0.0;
    return lo_.back();
}

int IntervalFamily::index_of(double x) const {
    if (kind_ == Kind::dyadic) {
        if (!(x > 0.0) || x >= 1.0) return 0;
        const int n = static_cast<int>(-std::floor(std::log2(x)));
        for (int k = std::max(1, n - 1); k <= n + 1 && k <= max_live_; ++k)
            if (x >= lo(k) && x < hi(k)) return k;
        return 0;
    }
    if (!(x >= 0.0) || x >= accumulation_point()) return 0;
    int a = 1, b = max_live_;
    while (a < b) {  // lo_ is increasing
        const int mid = (a + b + 1) / 2;
        if (x >= lo(mid)) a = mid;
        else b = mid - 1;
    }
    return (x >= lo(a) && x < hi(a)) ? a : 0;
}

}  // namespace lipcex
