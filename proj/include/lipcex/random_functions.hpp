#pragma once

#include <cstdint>
#include <random>

#include "lipcex/sequence.hpp"
#include "lipcex/step_function.hpp"

namespace lipcex {

/// Deterministic random source. All derived values are built from raw
/// mt19937_64 words with explicit arithmetic, so the same seed gives the same
/// stream on every platform (std distributions are not pinned by the
/// standard; we do not use them).
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// log-uniform magnitude in [lo, hi], lo > 0.
    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    /// Uniform integer in [0, n), n >= 1 (rejection sampling, unbiased).
    uint64_t below(uint64_t n);

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1u) != 0; }

private:
    std::mt19937_64 engine_;
};

/// Test-function source: pieces aligned to the dyadic grid of the given
/// level inside [0, 1), at most max_pieces of them, values log-uniform in
/// [vmin, vmax] with random signs. Values are quantized to multiples of
/// 2^-20: every sum, difference, min/max and dyadic average of such values
/// stays exactly representable in binary64, so the zero-tolerance pointwise
/// checks compare exact quantities.
struct StepGenerator {
    int max_pieces = 8;
    int grid_level = 12;
    double vmin = 1e-3;
    double vmax = 1e3;
    bool signed_values = true;

    StepFunction operator()(Rng& rng) const;
};

/// Finitely supported sequences: up to max_entries indices in [1, 2^index_level],
/// values log-uniform with random signs.
struct SequenceGenerator {
    int max_entries = 16;
    int index_level = 13;
    double vmin = 1e-3;
    double vmax = 1e3;

    Sequence operator()(Rng& rng) const;
};

}  // namespace lipcex
