#include <doctest.h>

#include <cmath>

#include "k_oracle.hpp"
#include "lipcex/interpolation.hpp"
#include "lipcex/random_functions.hpp"

using namespace lipcex;
using lipcex::testing::k_decomposition_oracle;

TEST_CASE("k functional closed cases") {
    const StepFunction chi = StepFunction::indicator(0.0, 1.0, 1.0);
    CHECK(k_functional(chi, 0.5, CoupleOrder::l1_linf) == doctest::Approx(0.5));
    CHECK(k_functional(chi, 2.0, CoupleOrder::l1_linf) == doctest::Approx(1.0));
    // reversed couple: K(t, f; Linf, L1) = t K(1/t, f; L1, Linf)
    CHECK(k_functional(chi, 2.0, CoupleOrder::linf_l1) ==
          doctest::Approx(2.0 * k_functional(chi, 0.5, CoupleOrder::l1_linf)));
    CHECK(k_functional(StepFunction{}, 1.0, CoupleOrder::l1_linf) == 0.0);
}

TEST_CASE("k functional matches the decomposition oracle") {
    Rng rng(321);
    const StepGenerator gen;
    for (int i = 0; i < 100; ++i) {
        const StepFunction f = gen(rng);
        for (int k = -20; k <= 20; k += 2) {
            const double t = std::exp2(k);
            CHECK(std::abs(k_functional(f, t, CoupleOrder::l1_linf) - k_decomposition_oracle(f, t)) <=
                  1e-6);
        }
    }
}

TEST_CASE("k profile shape") {
    Rng rng(55);
    const StepGenerator gen;
    for (int i = 0; i < 200; ++i) {
        const StepFunction f = gen(rng);
        const KProfile k = k_profile(f);
        double prev = 0.0, prev_ratio = kInf;
        for (int j = -10; j <= 12; ++j) {
            const double t = std::exp2(j);
            const double kt = k.eval(t);
            CHECK(kt >= prev - 1e-12);  // nondecreasing
            const double ratio = kt / t;
            CHECK(ratio <= prev_ratio * (1.0 + 1e-12));  // K(t)/t nonincreasing
            prev = kt;
            prev_ratio = ratio;
            // concavity on a triple of consecutive grid points
            const double mid = k.eval(1.5 * t);
            CHECK(mid >= 0.5 * (kt + k.eval(2.0 * t)) - 1e-12 * std::max(1.0, kt));
        }
        CHECK(k.total() == doctest::Approx(f.norm_l1()).epsilon(1e-12));
    }
}

TEST_CASE("lorentz quasinorm closed cases") {
    // psi = mu(E)^{-1/p} chi_E has ||psi||_{p,q} = (p/q)^{1/q} and 1 at q = inf
    const double mu = 0.0625;
    for (const double p : {1.5, 2.0, 3.0}) {
        const StepFunction psi =
            StepFunction::indicator(0.25, 0.25 + mu, std::pow(mu, -1.0 / p));
        for (const double q : {1.0, 2.0, 3.5}) {
            CHECK(lorentz_quasinorm(psi, p, q) ==
                  doctest::Approx(std::pow(p / q, 1.0 / q)).epsilon(1e-12));
        }
        CHECK(lorentz_quasinorm(psi, p, kInf) == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(lorentz_quasinorm(StepFunction{}, 2.0, 2.0) == 0.0);
    CHECK_THROWS_AS(lorentz_quasinorm(StepFunction{}, 1.0, 2.0), DomainError);
    CHECK_THROWS_AS(lorentz_quasinorm(StepFunction{}, 2.0, 0.5), DomainError);
}

TEST_CASE("lorentz at q = p reproduces the Lp norm bit for bit") {
    Rng rng(777);
    const StepGenerator gen;
    for (int i = 0; i < 500; ++i) {
        const StepFunction f = gen(rng);
        for (const double p : {1.5, 2.0, 3.0})
            CHECK(lorentz_quasinorm(f, p, p) == f.norm_lp(p));
    }
}

TEST_CASE("interpolation norm closed cases") {
    InterpParams params;
    params.theta = 0.5;
    params.q = kInf;
    params.couple = CoupleOrder::l1_linf;
    const StepFunction chi = StepFunction::indicator(0.0, 1.0, 1.0);
    // sup_t t^{-1/2} min(t, 1) = 1
    CHECK(interp_norm(chi, params) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(interp_norm(StepFunction{}, params) == 0.0);

    // integral form at theta = 1/2, q = 2: segments contribute 1 + 1
    params.q = 2.0;
    CHECK(interp_norm(chi, params) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    // the couple reduction: (Linf, L1) at theta equals (L1, Linf) at 1-theta
    Rng rng(31);
    const StepGenerator gen;
    for (int i = 0; i < 50; ++i) {
        const StepFunction f = gen(rng);
        InterpParams a{0.25, 2.0, CoupleOrder::linf_l1};
        InterpParams b{0.75, 2.0, CoupleOrder::l1_linf};
        CHECK(interp_norm(f, a) == doctest::Approx(interp_norm(f, b)).epsilon(1e-12));
    }
}

TEST_CASE("interpolation norm against direct quadrature") {
    // brute-force dt/t integral on a fine log grid as an independent route
    Rng rng(4242);
    const StepGenerator gen;
    InterpParams params{0.5, 2.0, CoupleOrder::l1_linf};
    for (int i = 0; i < 20; ++i) {
        const StepFunction f = gen(rng);
        const KProfile k = k_profile(f);
        double acc = 0.0;
        const int steps = 40000;
        const double lo = -40.0, hi = 40.0;
        const double dl = (hi - lo) / steps * std::log(2.0);
        for (int j = 0; j < steps; ++j) {
            const double t = std::exp2(lo + (j + 0.5) * (hi - lo) / steps);
            const double val = std::pow(t, -params.theta) * k.eval(t);
            acc += val * val * dl;
        }
        const double want = std::sqrt(acc);
        CHECK(interp_norm(f, params) == doctest::Approx(want).epsilon(1e-5));
    }
}

TEST_CASE("interpolation parameters and the Lorentz exponent") {
    CHECK(InterpParams{0.25, 1.0, CoupleOrder::linf_l1}.lorentz_p() == 4.0);
    CHECK(InterpParams{0.25, 1.0, CoupleOrder::l1_linf}.lorentz_p() ==
          doctest::Approx(4.0 / 3.0));
    const InterpParams back = InterpParams::for_lorentz(4.0, 2.0, CoupleOrder::linf_l1);
    CHECK(back.theta == 0.25);
    CHECK(back.lorentz_p() == 4.0);
    CHECK_THROWS_AS(InterpParams::for_lorentz(1.0, 2.0, CoupleOrder::linf_l1),
                    DomainError);
    CHECK_THROWS_AS((InterpParams{0.0, 2.0, CoupleOrder::linf_l1}).validate(),
                    DomainError);
    CHECK_THROWS_AS((InterpParams{0.5, 0.5, CoupleOrder::linf_l1}).validate(),
                    DomainError);
}

TEST_CASE("lorentz and interpolation norms are equivalent") {
    // measured equivalence ratio over random data stays inside a fixed window
    Rng rng(808);
    const StepGenerator gen;
    InterpParams params{0.5, 2.0, CoupleOrder::linf_l1};
    const double p = params.lorentz_p();
    CHECK(p == doctest::Approx(2.0));
    double lo_ratio = kInf, hi_ratio = 0.0;
    for (int i = 0; i < 100; ++i) {
        const StepFunction f = gen(rng);
        const double ratio = interp_norm(f, params) / lorentz_quasinorm(f, p, params.q);
        lo_ratio = std::min(lo_ratio, ratio);
        hi_ratio = std::max(hi_ratio, ratio);
    }
    constexpr double c = 4.0;
    CHECK(lo_ratio >= 1.0 / c);
    CHECK(hi_ratio <= c);
    MESSAGE("measured equivalence ratio range: [", lo_ratio, ", ", hi_ratio, "]");
}

TEST_CASE("k profile of a piecewise linear function") {
    // u(x) = 1 - x on [0, 1]: K(t) = t - t^2/2 up to 1, then 1/2
    const PiecewiseLinear u({0.0, 1.0}, {1.0, 0.0});
    const KProfile k = k_profile(u);
    CHECK(k.eval(0.5) == doctest::Approx(0.5 - 0.125).epsilon(1e-12));
    CHECK(k.eval(1.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(k.eval(3.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(k.total() == doctest::Approx(0.5).epsilon(1e-12));

    // the same data as a fine staircase gives nearly the same K
    std::vector<Piece> stair;
    const int cells = 4096;
    for (int i = 0; i < cells; ++i)
        stair.push_back(Piece{static_cast<double>(i) / cells,
                              static_cast<double>(i + 1) / cells,
                              1.0 - (i + 0.5) / cells});
    const KProfile ks = k_profile(StepFunction(std::move(stair)));
    for (double t : {0.1, 0.3, 0.9, 2.0})
        CHECK(k.eval(t) == doctest::Approx(ks.eval(t)).epsilon(1e-6));

    // interp norms of the profile agree between the two representations
    InterpParams params{0.5, 2.0, CoupleOrder::linf_l1};
    CHECK(interp_norm(k, params) == doctest::Approx(interp_norm(ks, params)).epsilon(1e-5));
}
