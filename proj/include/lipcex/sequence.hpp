#pragma once

#include <map>

#include "lipcex/common.hpp"
#include "lipcex/step_function.hpp"

namespace lipcex {

/// Finitely supported real sequence indexed from 1, viewed as an element of
/// l^infinity over counting measure.
class Sequence {
public:
    Sequence() = default;
    explicit Sequence(std::map<int, double> entries);

    const std::map<int, double>& entries() const { return entries_; }
    double operator[](int n) const;
    void set(int n, double value);
    bool is_zero() const { return entries_.empty(); }

    double norm_l1() const;
    double norm_linf() const;
    double norm_lp(double p) const;

    Sequence operator-(const Sequence& b) const;
    bool operator==(const Sequence&) const = default;

    /// Entrywise image under op (op(0) must be 0).
    Sequence map(const std::function<double(int, double)>& op) const;

    /// Embedding into step functions: entry n occupies the unit cell [n, n+1).
    /// Counting-measure norms, rearrangements and K-functionals coincide with
    /// the Lebesgue ones of the embedded function.
    StepFunction to_step() const;

private:
    std::map<int, double> entries_;  // nonzero values only
};

}  // namespace lipcex
