#include <doctest.h>

#include <cmath>

#include "lipcex/interval_family.hpp"

using namespace lipcex;

TEST_CASE("dyadic family") {
    const IntervalFamily fam = IntervalFamily::dyadic();
    CHECK(fam.lo(1) == 0.5);
    CHECK(fam.hi(1) == 1.0);
    CHECK(fam.width(3) == std::exp2(-3));
    CHECK(fam.measure_formula(3) == std::exp2(-3));
    CHECK(fam.accumulation_point() == 0.0);

    // indices resolve exactly, including at endpoints
    for (int n = 1; n <= 40; ++n) {
        CHECK(fam.index_of(fam.lo(n)) == n);
        CHECK(fam.index_of(0.5 * (fam.lo(n) + fam.hi(n))) == n);
    }
    CHECK(fam.index_of(1.0) == 0);
    CHECK(fam.index_of(0.0) == 0);
    CHECK_THROWS_AS(fam.lo(0), DomainError);
}

TEST_CASE("geometric family packs [0, 1] without gaps") {
    for (const double p : {1.5, 2.0, 3.0}) {
        const IntervalFamily fam = IntervalFamily::geometric(p);
        CHECK(fam.lo(1) == 0.0);
        CHECK(fam.max_live() > 5);
        CHECK(fam.accumulation_point() <
              1.0 / (std::exp2(p) - 1.0) * (1.0 + 1e-12) + 1e-12);
        double end = 0.0;
        for (int n = 1; n <= fam.max_live(); ++n) {
            CHECK(fam.lo(n) == end);  // contiguous
            CHECK(fam.width(n) > 0.0);
            CHECK(fam.width(n) ==
                  doctest::Approx(fam.measure_formula(n)).epsilon(1e-10));
            end = fam.hi(n);
            CHECK(fam.index_of(fam.lo(n)) == n);
        }
        CHECK(end <= 1.0);
        CHECK(fam.index_of(end) == 0);  // past the family
        CHECK(fam.index_of(0.9) == 0);
    }
    // widths are bit-exact powers of four deep into the p = 2 family
    const IntervalFamily fam2 = IntervalFamily::geometric(2.0);
    for (int n = 1; n <= std::min(26, fam2.max_live()); ++n)
        CHECK(fam2.width(n) == std::exp2(-2.0 * n));

    CHECK_THROWS_AS(IntervalFamily::geometric(1.0), DomainError);
}
