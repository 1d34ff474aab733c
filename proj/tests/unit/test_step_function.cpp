#include <doctest.h>

#include "lipcex/random_functions.hpp"
#include "lipcex/serialize.hpp"
#include "lipcex/step_function.hpp"

using namespace lipcex;

TEST_CASE("construction and canonical form") {
    const StepFunction f({{0.5, 1.0, 2.0}, {0.0, 0.25, 1.0}});
    CHECK(f.pieces().size() == 2);
    CHECK(f.pieces()[0].lo == 0.0);  // sorted
    CHECK(f(0.1) == 1.0);
    CHECK(f(0.25) == 0.0);
    CHECK(f(0.5) == 2.0);
    CHECK(f(1.0) == 0.0);  // half-open

    // touching equal-value pieces merge, zero pieces vanish
    const StepFunction g({{0.0, 0.5, 3.0}, {0.5, 1.0, 3.0}, {2.0, 3.0, 0.0}});
    CHECK(g.pieces().size() == 1);
    CHECK(g.support_measure() == 1.0);

    CHECK_THROWS_AS(StepFunction({{0.0, 0.5, 1.0}, {0.25, 1.0, 2.0}}), DomainError);
    CHECK_THROWS_AS(StepFunction({{-0.5, 0.5, 1.0}}), DomainError);
}

TEST_CASE("norms") {
    const StepFunction f = StepFunction::indicator(0.5, 1.0, 2.0);
    CHECK(f.norm_l1() == 1.0);
    CHECK(f.norm_linf() == 2.0);

    // normalized indicator of a geometric interval: ||2^N chi||_p = 1
    const int N = 3;
    const double p = 2.0;
    const StepFunction psi = StepFunction::indicator(0.0, std::exp2(-N * p), std::exp2(N));
    CHECK(psi.norm_lp(p) == doctest::Approx(1.0).epsilon(1e-14));

    // dyadic version: ||2^{N/p} chi_{I_N}||_p = 1 with |I_N| = 2^-N
    const StepFunction psi2 =
        StepFunction::indicator(std::exp2(-16), std::exp2(-15), std::exp2(16.0 / p));
    CHECK(psi2.norm_lp(p) == doctest::Approx(1.0).epsilon(1e-14));

    CHECK(StepFunction{}.norm_l1() == 0.0);
    CHECK(StepFunction{}.norm_linf() == 0.0);
    CHECK(StepFunction{}.norm_lp(1.5) == 0.0);
    CHECK_THROWS_AS(f.norm_lp(0.0), DomainError);
    CHECK_THROWS_AS(f.norm_lp(-2.0), DomainError);
}

TEST_CASE("decreasing rearrangement") {
    // indicator rearranges to an indicator anchored at 0
    const StepFunction chi = StepFunction::indicator(0.3, 0.7, 1.0);
    const StepFunction r = chi.decreasing_rearrangement();
    REQUIRE(r.pieces().size() == 1);
    CHECK(r.pieces()[0].lo == 0.0);
    CHECK(r.pieces()[0].hi == doctest::Approx(0.4));
    CHECK(r.pieces()[0].value == 1.0);

    const StepFunction f({{0.0, 0.25, 2.0}, {0.5, 1.0, 1.0}});
    const StepFunction fr = f.decreasing_rearrangement();
    REQUIRE(fr.pieces().size() == 2);
    CHECK(fr(0.1) == 2.0);
    CHECK(fr(0.25) == 1.0);
    CHECK(fr(0.7) == 1.0);
    CHECK(fr(0.75) == 0.0);

    // (c f)* = c f*
    const StepFunction scaled = f.scaled(3.0).decreasing_rearrangement();
    CHECK(scaled == fr.scaled(3.0));
}

TEST_CASE("equimeasurability and rearrangement monotonicity") {
    Rng rng(2024);
    const StepGenerator gen;
    for (int i = 0; i < 300; ++i) {
        const StepFunction f = gen(rng);
        const StepFunction r = f.decreasing_rearrangement();
        // |{f* > s}| == |{|f| > s}| exactly at every value level
        for (const Piece& p : f.pieces()) {
            const double s = std::abs(p.value);
            CHECK(r.measure_above(s) == f.measure_above(s));
            CHECK(r.measure_above(s / 2) == f.measure_above(s / 2));
        }
        CHECK(r.measure_above(0.0) == f.measure_above(0.0));

        // 0 <= |f| <= |g| implies f* <= g*
        const StepFunction g = f.abs() + gen(rng).abs();
        CHECK(StepFunction::pointwise_le(r, g.decreasing_rearrangement()));
    }
}

TEST_CASE("pointwise combine") {
    const StepFunction f = StepFunction::indicator(0.0, 1.0, 3.0);
    const StepFunction v = StepFunction::indicator(0.0, 0.5, 2.0);
    const StepFunction mn = StepFunction::pointwise_min(f, v);
    CHECK(mn(0.25) == 2.0);
    CHECK(mn(0.75) == 0.0);
    const StepFunction mx = StepFunction::pointwise_max(f, v);
    CHECK(mx(0.25) == 3.0);
    CHECK(mx(0.75) == 3.0);

    CHECK((f - f).is_zero());
    CHECK(StepFunction::min_gap(v, f) == 0.0);   // v <= f, with equality off [0, 1)
    CHECK(StepFunction::min_gap(f, v) == -3.0);  // f exceeds v on [0.5, 1)
}

TEST_CASE("json and csv round trip") {
    Rng rng(7);
    const StepGenerator gen;
    for (int i = 0; i < 50; ++i) {
        const StepFunction f = gen(rng);
        CHECK(step_from_json(step_to_json(f)) == f);
    }
    const StepFunction f({{0.25, 0.5, 1.5}, {0.75, 1.0, -2.0}});
    const ordered_json j = step_to_json(f);
    CHECK(j["breaks"].size() == 4);  // interior gap becomes an explicit zero
    CHECK(j["values"].size() == 3);
    CHECK(j["values"][1] == 0.0);
    const std::string csv = step_to_csv(f);
    CHECK(csv.find("x,value") == 0);
}
