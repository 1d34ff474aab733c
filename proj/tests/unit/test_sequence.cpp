#include <doctest.h>

#include "lipcex/random_functions.hpp"
#include "lipcex/sequence.hpp"

using namespace lipcex;

TEST_CASE("sequence basics") {
    Sequence a;
    CHECK(a.is_zero());
    a.set(3, 2.0);
    a.set(7, -1.0);
    CHECK(a[3] == 2.0);
    CHECK(a[4] == 0.0);
    CHECK(a.norm_l1() == 3.0);
    CHECK(a.norm_linf() == 2.0);
    CHECK(a.norm_lp(2.0) == doctest::Approx(std::sqrt(5.0)));

    a.set(3, 0.0);  // zeros drop out of the support
    CHECK(a.entries().size() == 1);

    CHECK_THROWS_AS(a.set(0, 1.0), DomainError);
    CHECK_THROWS_AS(Sequence({{-2, 1.0}}), DomainError);
}

TEST_CASE("difference and entrywise maps") {
    const Sequence a({{1, 2.0}, {4, -3.0}});
    const Sequence b({{4, -3.0}, {9, 1.0}});
    const Sequence d = a - b;
    CHECK(d[1] == 2.0);
    CHECK(d[4] == 0.0);
    CHECK(d[9] == -1.0);

    const Sequence clipped = a.map([](int, double v) { return std::min(std::abs(v), 2.5); });
    CHECK(clipped[1] == 2.0);
    CHECK(clipped[4] == 2.5);
}

TEST_CASE("unit-cell embedding preserves the counting-measure norms") {
    Rng rng(1212);
    const SequenceGenerator gen;
    for (int i = 0; i < 300; ++i) {
        const Sequence a = gen(rng);
        const StepFunction f = a.to_step();
        CHECK(f.norm_linf() == a.norm_linf());
        CHECK(f.norm_l1() == doctest::Approx(a.norm_l1()).epsilon(1e-14));
        CHECK(f.norm_lp(1.5) == doctest::Approx(a.norm_lp(1.5)).epsilon(1e-13));
        CHECK(f.support_measure() == static_cast<double>(a.entries().size()));
    }
}
