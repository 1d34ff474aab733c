#include <doctest.h>

#include <cmath>

#include "lipcex/operators.hpp"
#include "lipcex/random_functions.hpp"

using namespace lipcex;

TEST_CASE("lambda and m-tilde basics") {
    CHECK(lambda_v(StepFunction{}, StepFunction{}).is_zero());
    CHECK(m_tilde_v(StepFunction{}, StepFunction{}).is_zero());

    const StepFunction f = StepFunction::indicator(0.0, 1.0, 3.0);
    const StepFunction v = StepFunction::indicator(0.0, 0.5, 2.0);
    const StepFunction lf = lambda_v(f, v);
    CHECK(lf(0.25) == 2.0);
    CHECK(lf(0.75) == 0.0);

    const StepFunction w = StepFunction::indicator(0.0, 1.0, 1.0);
    CHECK(m_tilde_v(f, w) == StepFunction::indicator(0.0, 1.0, 2.0));

    // negative input values pass through the absolute value
    CHECK(lambda_v(f.scaled(-1.0), v) == lf);

    CHECK_THROWS_AS(lambda_v(f, v.scaled(-1.0)), DomainError);
}

TEST_CASE("pointwise 1-Lipschitz inequalities are exact on grid data") {
    Rng rng(11);
    const StepGenerator gen;
    for (int i = 0; i < 2000; ++i) {
        const StepFunction f = gen(rng), g = gen(rng), v = gen(rng).abs();
        const StepFunction din = (f - g).abs();
        CHECK(StepFunction::min_gap((lambda_v(f, v) - lambda_v(g, v)).abs(), din) >= 0.0);
        CHECK(StepFunction::min_gap((m_tilde_v(f, v) - m_tilde_v(g, v)).abs(), din) >=
              0.0);
    }
}

TEST_CASE("conditional expectation over the dyadic family") {
    const IntervalFamily fam = IntervalFamily::dyadic();

    // averaging a constant on I_n returns it unchanged
    const StepFunction c3 = StepFunction::indicator(fam.lo(3), fam.hi(3), 5.0);
    CHECK(cond_expectation(c3, fam, 64) == c3);

    // half-filled interval averages to half the value
    const double mid = 0.5 * (fam.lo(3) + fam.hi(3));
    const StepFunction half = StepFunction::indicator(fam.lo(3), mid, 1.0);
    const StepFunction q = cond_expectation(half, fam, 64);
    CHECK(q(fam.lo(3)) == 0.5);
    CHECK(q.support_measure() == doctest::Approx(fam.width(3)));

    // a piece running into the accumulation point stays exact: the average is
    // the constant itself on every deeper interval
    const StepFunction tail = StepFunction::indicator(0.0, std::exp2(-12), 3.0);
    CHECK(cond_expectation(tail, fam, 64) == tail);

    // structure below 2^-n_max is refused
    const StepFunction deep =
        StepFunction::indicator(std::exp2(-70), std::exp2(-69), 1.0);
    CHECK_THROWS_AS(cond_expectation(deep, fam, 64), DomainError);
    CHECK_THROWS_AS(
        cond_expectation(StepFunction::indicator(0.5, 1.5, 1.0), fam, 64), DomainError);

    // contraction in both norms
    Rng rng(5150);
    const StepGenerator gen;
    for (int i = 0; i < 2000; ++i) {
        const StepFunction f = gen(rng), g = gen(rng);
        const StepFunction qf = cond_expectation(f, fam, 64);
        const StepFunction qg = cond_expectation(g, fam, 64);
        CHECK((qf - qg).norm_l1() <= (f - g).norm_l1() * (1.0 + 1e-12) + 1e-15);
        CHECK((qf - qg).norm_linf() <= (f - g).norm_linf() * (1.0 + 1e-12) + 1e-15);
    }
}

TEST_CASE("t1 fixes the normalized indicators above sigma_p") {
    const Operator t1 = make_t1();
    CHECK(t1(StepFunction{}).is_zero());

    const IntervalFamily fam = IntervalFamily::dyadic();
    for (int n = 16; n <= 24; ++n) {
        const StepFunction psi =
            StepFunction::indicator(fam.lo(n), fam.hi(n), std::exp2(n / 2.0));
        CHECK(t1(psi) == psi);
    }
    // below the threshold the envelope clips
    const StepFunction psi15 =
        StepFunction::indicator(fam.lo(15), fam.hi(15), std::exp2(7.5));
    const StepFunction img = t1(psi15);
    CHECK(img(fam.lo(15)) == doctest::Approx(std::exp2(15) / 225.0));

    // image lies under the envelope 2^n/n^2 on every interval
    Rng rng(606);
    const StepGenerator gen;
    const IndexEnvelope env = t1_envelope();
    for (int i = 0; i < 1000; ++i) {
        const StepFunction out = t1(gen(rng));
        for (const Piece& p : out.pieces()) {
            CHECK(p.value >= 0.0);
            if (p.lo == 0.0) continue;  // constant run toward 0, checked below
            const int n = fam.index_of(p.lo);
            CHECK(n >= 1);
            CHECK(p.value <= env.value(n));
        }
        if (!out.pieces().empty() && out.pieces().front().lo == 0.0) {
            const Piece& tail = out.pieces().front();
            const int first = fam.index_of(tail.hi * 0.75);
            CHECK(env.stable_from(tail.value) <= first);
        }
    }
}

TEST_CASE("t2 subtracts the staircase weight") {
    const Operator t2 = make_t2();
    CHECK(t2(StepFunction{}).is_zero());

    const IntervalFamily fam = IntervalFamily::dyadic();
    const double p = 2.0;
    for (int n = 7; n <= 14; ++n) {  // tau_2 = 6
        const StepFunction psi =
            StepFunction::indicator(fam.lo(n), fam.hi(n), std::exp2(n / p));
        const StepFunction img = t2(psi);
        REQUIRE(img.pieces().size() == 1);
        CHECK(img(fam.lo(n)) == doctest::Approx(std::exp2(n / p) - n).epsilon(1e-15));
    }

    // anything bounded by 1 is annihilated
    Rng rng(33);
    StepGenerator gen;
    gen.vmax = 1.0;
    for (int i = 0; i < 500; ++i) CHECK(t2(gen(rng)).is_zero());

    // bounded inputs land in the finite box
    gen.vmax = 1e3;
    for (int i = 0; i < 500; ++i) {
        StepFunction f = gen(rng);
        const double norm = f.norm_linf();
        if (norm > 0.0) f = f.scaled(3.0 / norm);
        const StepFunction img = t2(f);
        if (img.is_zero()) continue;
        CHECK(img.support_begin() >= fam.lo(2));  // support inside I_1 and I_2
        CHECK(img.norm_linf() <= 3.0 + 1e-12);
    }
}

TEST_CASE("composition and centering") {
    const Operator t1 = make_t1();
    const Operator t2 = make_t2();
    const Operator t3 = make_t3();

    const IntervalFamily fam = IntervalFamily::dyadic();
    const double p = 2.0;
    for (int n = 17; n <= 22; ++n) {  // above max(sigma_2, tau_2) = 16
        const StepFunction psi =
            StepFunction::indicator(fam.lo(n), fam.hi(n), std::exp2(n / p));
        CHECK(t3(psi) == t2(t1(psi)));
        CHECK(t3(psi) == t2(psi));  // t1 fixes psi there
    }

    CHECK(center(make_t1()).apply(StepFunction{}).is_zero());
    Rng rng(8);
    const StepGenerator gen;
    for (int i = 0; i < 200; ++i) {
        const StepFunction f = gen(rng);
        CHECK(center(make_t1()).apply(f) == t1(f));  // t1 already fixes zero
    }

    // centering an operator that moves 0: M_v(0) = v, and centering it
    // recovers the clipped operator with 0 fixed
    const StepFunction v = gen(rng).abs();
    const Operator raw{"m", [v](const StepFunction& f) { return m_v(f, v); }};
    CHECK(!raw(StepFunction{}).is_zero());
    const Operator fixed = center(raw);
    CHECK(fixed(StepFunction{}).is_zero());
    for (int i = 0; i < 200; ++i) {
        const StepFunction f = gen(rng);
        CHECK(fixed(f) == m_tilde_v(f, v));
        const StepFunction g = gen(rng);
        // centering preserves the Lipschitz property (the shift cancels)
        CHECK((fixed(f) - fixed(g)).norm_linf() <=
              (f - g).norm_linf() * (1.0 + 1e-12));
    }
}

TEST_CASE("t4 on sequences and embedded") {
    const SequenceOperator t4 = make_t4();
    CHECK(t4(Sequence{}).is_zero());

    CHECK(t4_weight(1) == 0.0);
    CHECK(t4_weight(2) == 1.0);
    CHECK(t4_weight(3) == 1.0);
    CHECK(t4_weight(4) == 0.5);
    CHECK(t4_weight(31) == doctest::Approx(0.25));
    CHECK(t4_weight(32) == doctest::Approx(0.2));

    // fixed point at p = 2, N = 5: value 2^{-5/2} on [2^5, 2^6)
    Sequence psi;
    for (int n = 32; n < 64; ++n) psi.set(n, std::exp2(-2.5));
    CHECK(t4(psi) == psi);

    // below the threshold the weight clips: N = 4 gives min(1/2, 1/4) = 1/4
    Sequence psi4;
    for (int n = 16; n < 32; ++n) psi4.set(n, std::exp2(-2.0));
    const Sequence img4 = t4(psi4);
    CHECK(img4[16] == doctest::Approx(0.25));

    // the embedded operator agrees with the entrywise one
    Rng rng(404);
    const SequenceGenerator gen;
    const Operator emb = make_t4_embedded();
    for (int i = 0; i < 500; ++i) {
        const Sequence a = gen(rng);
        CHECK(emb(a.to_step()) == t4(a).to_step());
    }

    // norms agree through the embedding
    for (int i = 0; i < 200; ++i) {
        const Sequence a = gen(rng);
        CHECK(a.norm_l1() == doctest::Approx(a.to_step().norm_l1()));
        CHECK(a.norm_linf() == a.to_step().norm_linf());
        CHECK(a.norm_lp(2.0) == doctest::Approx(a.to_step().norm_lp(2.0)));
    }
}

TEST_CASE("threshold scans") {
    CHECK(sigma_threshold(2.0).threshold == 16);
    CHECK(tau_threshold(2.0).threshold == 6);
    CHECK(nu4_threshold(2.0).threshold == 4);

    CHECK(sigma_threshold(1.5).threshold == 30);
    CHECK(tau_threshold(1.5).threshold == 3);
    CHECK(nu4_threshold(1.5).threshold == 0);

    CHECK(sigma_threshold(3.0).threshold == 10);
    CHECK(tau_threshold(3.0).threshold == 11);
    CHECK(nu4_threshold(3.0).threshold == 9);

    const ScanCertificate s = sigma_threshold(2.0);
    CHECK(s.minimal);
    CHECK(s.checked_from == 16);
    CHECK(s.checked_to >= s.checked_from + 63);
    CHECK(s.monotone_from <= s.checked_to);
}

TEST_CASE("operator Lipschitz sweeps in both norms") {
    Rng rng(900);
    const StepGenerator gen;
    const std::vector<Operator> ops{make_t1(), make_t2(), make_t3(), make_q_dyadic()};
    for (const Operator& op : ops) {
        for (int i = 0; i < 500; ++i) {
            const StepFunction f = gen(rng), g = gen(rng);
            const StepFunction tf = op(f), tg = op(g);
            CHECK((tf - tg).norm_l1() <= (f - g).norm_l1() * (1.0 + 1e-12) + 1e-15);
            CHECK((tf - tg).norm_linf() <= (f - g).norm_linf() * (1.0 + 1e-12) + 1e-15);
            CHECK(tf.norm_l1() <= f.norm_l1() * (1.0 + 1e-12));
            CHECK(tf.norm_linf() <= f.norm_linf() * (1.0 + 1e-12));
        }
    }
}
