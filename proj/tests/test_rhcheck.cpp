#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nzeta/invariants.hpp"
#include "nzeta/rhcheck.hpp"

using namespace nzeta;

namespace {

Curve e0() { return curve_from_point_counts("E0", 2, 1, {3}); }
Curve c5() { return curve_from_point_counts("C5", 2, 2, {3, 5}); }

double dbl(const BigFloat& x) { return x.to_double(); }

}  // namespace

TEST_CASE("quadratic roots from the closed form") {
    // 12T^2 + 3T + 3: T = (-1 +- i sqrt(15))/8, |T| = 1/2
    Poly p{Rational(3), Rational(3), Rational(12)};
    auto roots = find_roots(p, 128);
    REQUIRE(roots.size() == 2);
    for (const auto& r : roots) {
        CHECK(std::abs(dbl(r.re) + 1.0 / 8) < 1e-25);
        CHECK(std::abs(std::abs(dbl(r.im)) - std::sqrt(15.0) / 8) < 1e-15);
        CHECK(std::abs(dbl(r.abs()) - 0.5) < 1e-25);
    }

    // 48T^2 + 12T + 6: T = (-1 +- i sqrt(7))/8, |T| = 8^{-1/2}
    Poly p3{Rational(6), Rational(12), Rational(48)};
    for (const auto& r : find_roots(p3, 128))
        CHECK(std::abs(dbl(r.abs()) - 1.0 / std::sqrt(8.0)) < 1e-15);

    auto lin = find_roots(Poly{Rational(-1), Rational(1)}, 128);
    REQUIRE(lin.size() == 1);
    CHECK(dbl(lin[0].re) == doctest::Approx(1.0).epsilon(1e-30));
    CHECK(lin[0].im.is_zero());
}

TEST_CASE("degenerate and repeated-root polynomials still certify") {
    // (T-1)^2 (2T+1): double root
    Poly p = Poly{Rational(-1), Rational(1)} * Poly{Rational(-1), Rational(1)} *
             Poly{Rational(1), Rational(2)};
    auto roots = find_roots(p, 128);
    REQUIRE(roots.size() == 3);
    int near_one = 0;
    for (const auto& r : roots)
        if (std::abs(dbl(r.re) - 1.0) < 1e-9 && std::abs(dbl(r.im)) < 1e-9) ++near_one;
    CHECK(near_one == 2);

    // roots at the origin are deflated exactly
    Poly q = Poly::monomial(Rational(1), 2) * Poly{Rational(-3), Rational(1)};
    auto r2 = find_roots(q, 128);
    REQUIRE(r2.size() == 3);
    CHECK(r2[0].is_zero());
    CHECK(r2[1].is_zero());
    CHECK(dbl(r2[2].re) == doctest::Approx(3.0));
}

TEST_CASE("starved iteration budget reports non-convergence") {
    Poly p = bundle(c5(), 3).numerator;
    CHECK_THROWS_AS(find_roots(p, 128, 1), NonConvergence);
    CHECK_THROWS_AS(find_roots(Poly{Rational(5)}, 128), DomainViolation);  // degree 0
}

TEST_CASE("rank 1..3 verdicts for the elliptic curve") {
    Curve c = e0();
    for (int n : {1, 2, 3}) {
        RhVerdict v = rh_verdict(bundle(c, n), c.q);
        CHECK(v.holds);
        CHECK(dbl(v.max_rel_deviation) < 1e-9);
        double target = std::sqrt(std::pow(2.0, n));
        for (const auto& m : v.moduli) CHECK(dbl(m) == doctest::Approx(target).epsilon(1e-12));
    }
}

TEST_CASE("verdicts across the catalog shapes") {
    for (const Curve& c : {c5(), synth_curve("g2", 3, 2, {1, -2}),
                           synth_curve("g3", 2, 3, {0, 1, -1})})
        for (int n = 1; n <= 3; ++n) {
            RhVerdict v = rh_verdict(bundle(c, n), c.q);
            CHECK(v.holds);
        }
}

TEST_CASE("root set pairs under conjugation and omega -> Q/omega") {
    Curve c = c5();
    RhVerdict v = rh_verdict(bundle(c, 2), c.q, 1e-9, 128);
    double Q = v.Q.to_double();
    for (const auto& w : v.recip_roots) {
        bool has_conj = false, has_pair = false;
        for (const auto& u : v.recip_roots) {
            if (std::abs(dbl(u.re) - dbl(w.re)) < 1e-20 &&
                std::abs(dbl(u.im) + dbl(w.im)) < 1e-20)
                has_conj = true;
            // u * w = Q
            double pr = dbl(u.re) * dbl(w.re) - dbl(u.im) * dbl(w.im);
            double pi = dbl(u.re) * dbl(w.im) + dbl(u.im) * dbl(w.re);
            if (std::abs(pr - Q) < 1e-9 && std::abs(pi) < 1e-9) has_pair = true;
        }
        CHECK(has_conj);
        CHECK(has_pair);
    }
}

TEST_CASE("product of reciprocal roots is Q^g exactly from the coefficients") {
    for (const Curve& c : {e0(), c5(), synth_curve("g3", 2, 3, {0, 1, -1})})
        for (int n = 1; n <= 4; ++n) {
            ZetaBundle b = bundle(c, n);
            CHECK(b.numerator.leading() / b.numerator.coeff(0) == b.Q.pow(c.g));
        }
}

TEST_CASE("verdicts are stable when the precision increases") {
    for (const Curve& c : {e0(), c5()})
        for (int n = 1; n <= 3; ++n) {
            ZetaBundle b = bundle(c, n);
            RhVerdict v128 = rh_verdict(b, c.q, 1e-9, 128);
            RhVerdict v256 = rh_verdict(b, c.q, 1e-9, 256);
            CHECK(v128.holds);
            CHECK(v256.holds);
            CHECK(dbl(v256.max_rel_deviation) <= dbl(v128.max_rel_deviation) + 1e-30);
        }
}

TEST_CASE("coefficient bound checks pass on the catalog") {
    for (const Curve& c : {e0(), c5(), synth_curve("g2", 3, 2, {1, -2}),
                           synth_curve("g3", 2, 3, {0, 1, -1})})
        for (int n = 1; n <= 3; ++n) {
            for (const auto& row : check_rough_bounds(c, n))
                CHECK(row.verdict == Verdict::Pass);
            CHECK(check_beta_product_bounds(c, n).verdict == Verdict::Pass);
            CHECK(check_beta_ratio_bounds(c, n).verdict == Verdict::Pass);
        }
}

TEST_CASE("worked bound endpoints for the elliptic curve") {
    // n=2: 1 <= (Q-1) beta'(0) = 6 <= 9 with sqrt(Q) = 2 exact
    auto rows = check_rough_bounds(e0(), 2);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].value == "6");
    CHECK(rows[0].verdict == Verdict::Pass);

    // n=3: 9 - 2 sqrt(8) <= 7*(66/7)/6 = 11 <= 9 + 2 sqrt(8)
    auto rows3 = check_rough_bounds(e0(), 3);
    REQUIRE(rows3.size() == 1);
    CHECK(rows3[0].value == "11");
    CHECK(rows3[0].verdict == Verdict::Pass);

    // beta'(0) bounds at n=2: 1/3 <= 2 <= 3
    auto ratio = check_beta_ratio_bounds(e0(), 2);
    CHECK(ratio.value == "2");
    CHECK(ratio.verdict == Verdict::Pass);

    // the interval machinery reports a definite failure when fed one
    Interval lo = Interval::of(Rational(2), 128);
    Interval hi = Interval::of(Rational(3), 128);
    CHECK(leq(lo, hi) == Cmp3::True);
    CHECK(leq(hi, lo) == Cmp3::False);

    // straddling comparisons are indeterminate, never resolved silently
    Interval third = Interval::of(Rational(1, 3), 4);  // wide at 4 bits
    CHECK(leq(third, third) == Cmp3::Indeterminate);
    CHECK(leq(Interval::of(Rational(1, 3), 128), Interval::of(Rational(1, 3), 128)) ==
          Cmp3::Indeterminate);  // outward-rounded endpoints never touch
    CHECK(leq(Interval::of(1L, 128), Interval::of(1L, 128)) == Cmp3::True);  // exact stays exact
}
