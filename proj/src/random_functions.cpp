#include "lipcex/random_functions.hpp"

#include <algorithm>
#include <set>

namespace lipcex {

uint64_t Rng::below(uint64_t n) {
    if (n == 0) throw DomainError("Rng::below: n must be positive");
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % n;
}

namespace {

double quantize(double v) {
    const double q = std::round(v * 0x1p20) * 0x1p-20;
    return q == 0.0 ? std::copysign(0x1p-20, v) : q;
}

}  // namespace

StepFunction StepGenerator::operator()(Rng& rng) const {
    const int cells = 1 << grid_level;
    const int n_pieces = rng.uniform_int(1, max_pieces);
    // 2 n distinct grid points -> n disjoint [a, b) pieces
    std::set<int> points;
    while (static_cast<int>(points.size()) < 2 * n_pieces)
        points.insert(rng.uniform_int(0, cells));
    std::vector<int> sorted(points.begin(), points.end());
    std::vector<Piece> pieces;
    pieces.reserve(static_cast<size_t>(n_pieces));
    const double cell = std::exp2(-grid_level);
    for (int i = 0; i < n_pieces; ++i) {
        double v = quantize(rng.log_uniform(vmin, vmax));
        if (signed_values && rng.coin()) v = -v;
        pieces.push_back(Piece{sorted[2 * i] * cell, sorted[2 * i + 1] * cell, v});
    }
    return StepFunction(std::move(pieces));
}

Sequence SequenceGenerator::operator()(Rng& rng) const {
    const int n_entries = rng.uniform_int(1, max_entries);
    std::map<int, double> entries;
    for (int i = 0; i < n_entries; ++i) {
        const int n = rng.uniform_int(1, 1 << index_level);
        double v = quantize(rng.log_uniform(vmin, vmax));
        if (rng.coin()) v = -v;
        entries[n] = v;
    }
    return Sequence(std::move(entries));
}

}  // namespace lipcex
