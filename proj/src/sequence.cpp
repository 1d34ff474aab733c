#include "lipcex/sequence.hpp"

#include <cmath>

namespace lipcex {

Sequence::Sequence(std::map<int, double> entries) : entries_(std::move(entries)) {
    for (const auto& [n, v] : entries_) {
        if (n < 1) throw DomainError("Sequence: indices start at 1");
        if (!std::isfinite(v)) throw DomainError("Sequence: non-finite entry");
    }
    std::erase_if(entries_, [](const auto& kv) { return kv.second == 0.0; });
}

double Sequence::operator[](int n) const {
    const auto it = entries_.find(n);
    return it == entries_.end() ? 0.0 : it->second;
}

void Sequence::set(int n, double value) {
    if (n < 1) throw DomainError("Sequence: indices start at 1");
    if (value == 0.0)
        entries_.erase(n);
    else
        entries_[n] = value;
}

double Sequence::norm_l1() const {
    double s = 0.0;
    for (const auto& [n, v] : entries_) s += std::abs(v);
    return s;
}

double Sequence::norm_linf() const {
    double m = 0.0;
    for (const auto& [n, v] : entries_) m = std::max(m, std::abs(v));
    return m;
}

double Sequence::norm_lp(double p) const {
    if (!(p > 0.0)) throw DomainError("Sequence::norm_lp: p must be positive");
    double s = 0.0;
    for (const auto& [n, v] : entries_) s += std::pow(std::abs(v), p);
    return std::pow(s, 1.0 / p);
}

Sequence Sequence::operator-(const Sequence& b) const {
    std::map<int, double> out = entries_;
    for (const auto& [n, v] : b.entries_) out[n] -= v;
    return Sequence(std::move(out));
}

Sequence Sequence::map(const std::function<double(int, double)>& op) const {
    std::map<int, double> out;
    for (const auto& [n, v] : entries_) out[n] = op(n, v);
    return Sequence(std::move(out));
}

StepFunction Sequence::to_step() const {
    std::vector<Piece> pieces;
    pieces.reserve(entries_.size());
    for (const auto& [n, v] : entries_)
        pieces.push_back(Piece{static_cast<double>(n), static_cast<double>(n) + 1.0, v});
    return StepFunction(std::move(pieces));
}

}  // namespace lipcex
