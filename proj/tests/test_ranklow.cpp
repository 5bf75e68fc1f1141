#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nzeta/ranklow.hpp"

using namespace nzeta;

namespace {

Rational rat(const char* s) { return Rational::from_string(s); }
Curve e0() { return curve_from_point_counts("E0", 2, 1, {3}); }
Curve c5() { return curve_from_point_counts("C5", 2, 2, {3, 5}); }

}  // namespace

TEST_CASE("two-term rank-2 formula matches the assembly up to q^{g-1} nu1") {
    for (const Curve& c : {e0(), c5(), synth_curve("g2", 3, 2, {1, -2})}) {
        RatFunc lhs = sl_n_zeta(c, 2);
        RatFunc rhs = sl2_zeta_formula(c);
        RatFunc ratio = lhs / rhs;
        REQUIRE(ratio.is_constant());
        Rational constant = ratio.num().coeff(0) / ratio.den().coeff(0);
        SpecialValues sv = special_values(c, 1);
        CHECK(constant == pow_int(c.q, c.g - 1) * sv.nu_hat[1]);
    }
    // E0: q^0 * 3 * formula = 3 + 18T/((1-T)(1-4T))
    RatFunc expect(Poly{Rational(3), Rational(3), Rational(12)},
                   Poly{Rational(1), Rational(-1)} * Poly{Rational(1), Rational(-4)});
    CHECK(Rational(3) * sl2_zeta_formula(e0()) == expect);
}

TEST_CASE("conjugate-pair modulus comparison") {
    // alpha, beta = sqrt(2) e^{+-i pi/2} = +-i sqrt(2); w = 0.5:
    // |w^2+2| = 2.25 vs |1+2w^2| = 1.5
    std::complex<double> a(0.0, std::sqrt(2.0)), b(0.0, -std::sqrt(2.0));
    CHECK(yoshida_compare(a, b, 2.0, 0.0, {0.5, 0.0}) == Ordering::GT);
    CHECK(yoshida_compare(a, b, 2.0, 0.0, {2.0, 0.0}) == Ordering::LT);
    // degenerate real pair (1, q)
    CHECK(yoshida_compare({1.0, 0.0}, {2.0, 0.0}, 2.0, 0.0, {0.5, 0.0}) == Ordering::GT);
    CHECK(yoshida_compare({1.0, 0.0}, {2.0, 0.0}, 2.0, 0.0, {0.3, 1.2}) == Ordering::LT);

    CHECK_THROWS_AS(yoshida_compare(a, b, 2.0, -1.0, {0.5, 0.0}), DomainViolation);
    CHECK_THROWS_AS(yoshida_compare(a, a, 2.0, 0.0, {0.5, 0.0}), DomainViolation);
    CHECK_THROWS_AS(yoshida_compare({3.0, 0.0}, {2.0, 0.0}, 2.0, 0.0, {0.5, 0.0}),
                    DomainViolation);
}

TEST_CASE("comparison property over random admissible samples") {
    for (double q : {2.0, 3.0, 5.0}) {
        YoshidaScan scan = yoshida_scan(q, 10000, 0xfeedULL);
        CHECK(scan.samples == 20000);
        CHECK(scan.violations == 0);
        CHECK(scan.unexpected_eq == 0);
    }
}

TEST_CASE("gap function is nonnegative and vanishes only at zero") {
    CHECK(yoshida_gap(2.0, 0.0) == 0.0);
    CHECK(yoshida_gap(2.0, 1.0) == 3.0);  // 8 + 1 - 6
    CHECK(yoshida_gap(3.0, 0.5) > 0.0);
    int checked = 0;
    for (int i = 0; i < 32; ++i) {
        double q = 1.0 + std::pow(10.0, -3.0 + 5.0 * i / 31.0);
        for (int j = 0; j < 32; ++j) {
            double x = j == 0 ? 0.0 : std::pow(10.0, -4.0 + 5.0 * j / 31.0);
            double v = yoshida_gap(q, x);
            CHECK(v >= 0.0);
            if (x > 0.0) CHECK(v > 0.0);
            ++checked;
        }
    }
    CHECK(checked == 1024);
}

TEST_CASE("rank-3 split identities hold exactly") {
    for (const Curve& c : {e0(), c5(), synth_curve("g2", 3, 2, {1, -2}),
                           synth_curve("g3", 2, 3, {0, 1, -1})}) {
        Rank3Parts p = rank3_parts(c);  // constructor asserts sum + FE identities
        CHECK(p.z1 + p.z2 + p.z3 == p.z_le2 + p.z_ge2);
        CHECK(pow_int(c.q, 3L * (c.g - 1)) * (p.z1 + p.z2 + p.z3) == sl_n_zeta(c, 3));
        CHECK(p.z_le2.invert_substitute(pow_int(c.q, 3)) == p.z_ge2);
    }
}

TEST_CASE("rank-3 sum for the elliptic curve is the assembled zeta") {
    Rank3Parts p = rank3_parts(e0());
    RatFunc expect(Poly{Rational(6), Rational(12), Rational(48)},
                   Poly{Rational(1), Rational(-1)} * Poly{Rational(1), Rational(-8)});
    CHECK(p.z1 + p.z2 + p.z3 == expect);

    // point check of the middle term at T = 1/16 against the direct formula:
    // v1^2 * [T/(T-1)] * [1/(1-8T)] * Zhat(2T) = 9 * (-1/15) * 2 * (11/7)
    CHECK(p.z2.evaluate(rat("1/16")) == rat("-66/35"));
}

TEST_CASE("upper-half zeros are off the one-third line on real curves") {
    // The exact witness: if all numerator roots had |T| = 1/q, the modulus of
    // constant/leading would be q^{-deg}. It is not, so the verdict is false.
    {
        Rank3Parts p = rank3_parts(e0());
        const Poly& num = p.z_ge2.num();
        Rational prod = (num.coeff(0) / num.leading()).abs();
        CHECK(prod == rat("1/10"));
        CHECK(prod != pow_int(e0().q, -num.degree()));
        CircleVerdict v = rh_third_line(p, e0());
        CHECK_FALSE(v.holds);
        REQUIRE(v.moduli.size() == 3);
    }
    {
        Curve c = c5();
        Rank3Parts p = rank3_parts(c);
        const Poly& num = p.z_ge2.num();
        CHECK((num.coeff(0) / num.leading()).abs() == rat("11/240"));
        CircleVerdict v = rh_third_line(p, c);
        CHECK_FALSE(v.holds);
        REQUIRE(v.moduli.size() == 5);
    }
}

TEST_CASE("the circle verdict itself holds on an on-circle control") {
    // (1+2T)(1+2T+4T^2): all roots of modulus 1/2 -> reciprocal modulus 2
    Poly control = Poly{Rational(1), Rational(2)} * Poly{Rational(1), Rational(2), Rational(4)};
    CircleVerdict v = reciprocal_roots_on_circle(control, BigFloat::of(2L, 128), 1e-9, 128);
    CHECK(v.holds);

    // a perturbed coefficient is a negative control
    Poly fuzz = control + Poly::monomial(Rational(1, 7), 1);
    CircleVerdict w = reciprocal_roots_on_circle(fuzz, BigFloat::of(2L, 128), 1e-9, 128);
    CHECK_FALSE(w.holds);
}

TEST_CASE("full rank-3 verdict and the half-plane consequence hold") {
    for (const Curve& c : {e0(), c5(), synth_curve("g2", 3, 2, {1, -2}),
                           synth_curve("g3", 2, 3, {0, 1, -1})}) {
        ZetaBundle b = bundle(c, 3);
        RhVerdict v = rh_verdict(b, c.q);
        CHECK(v.holds);
        // no numerator root beyond |T| = Q^{-1/2} + tol
        BigFloat bound = BigFloat::of(1L, v.precision_bits) /
                             BigFloat::of(b.Q, v.precision_bits).sqrt() +
                         BigFloat::of(1e-9, v.precision_bits);
        for (const auto& r : v.roots_T) CHECK(!(r.abs() > bound));
    }
}

TEST_CASE("reflected-argument ratio predicate") {
    for (const Curve& c : {e0(), c5()}) {
        for (int a = 1; a <= 3; ++a) {
            PredicateReport rep = check_reflected_zeta_ratio(c, 3, a, 200, 7);
            CHECK(rep.pass());
            CHECK(rep.samples + rep.skipped_at_pole == 400);
            CHECK(rep.boundary > 0);
            if (2 * a == 4) CHECK(rep.identity == rep.samples);
        }
    }
}

TEST_CASE("adjacent-argument ratio predicate") {
    for (const Curve& c : {e0(), c5(), synth_curve("g2", 3, 2, {1, -2})})
        for (int a = 1; a <= 2; ++a) {
            PredicateReport rep = check_adjacent_zeta_ratio(c, 3, a, 200, 7);
            CHECK(rep.pass());
            CHECK(rep.samples > 300);
        }
}

TEST_CASE("disc containment report") {
    // genus 1: ratio = 1 < 3/2, disc [1/4, 7/4] leaves the unit disc
    UnitDiscReport r = check_unit_disc_containment(e0());
    CHECK(r.ratio == Rational(1));
    CHECK(r.threshold_b == rat("3/2"));
    CHECK_FALSE(r.ratio_gt_b);
    CHECK(r.ratio_gt_a);  // 1 > 2/3
    REQUIRE(r.radius_defined);
    CHECK(r.center == Rational(1));
    CHECK(r.radius == rat("3/4"));
    CHECK_FALSE(r.contained);

    // genus 2: both inequalities hold and the disc is contained
    UnitDiscReport s = check_unit_disc_containment(c5());
    CHECK(s.ratio == rat("13/6"));
    CHECK(s.ratio_gt_a);
    CHECK(s.ratio_gt_b);
    REQUIRE(s.radius_defined);
    CHECK(s.center == rat("11/18"));
    CHECK(s.radius == rat("1/6"));
    CHECK(s.contained);

    UnitDiscReport t = check_unit_disc_containment(synth_curve("g2", 3, 2, {1, -2}));
    CHECK(t.ratio_gt_a);
    CHECK(t.ratio_gt_b);
    CHECK(t.contained);
}

TEST_CASE("composition tail-factor functions in u") {
    Curve c = e0();
    SpecialValues sv = special_values(c, 3);

    // n=3, a=2: f = nu1/(1-u), single composition (1)
    auto [f2, g2] = ratio_factor_functions(c, 3, 2);
    CHECK(f2 == RatFunc(Poly{sv.nu_hat[1]}, Poly{Rational(1), Rational(-1)}));

    // n=3, a=3: f = 1 (empty composition)
    auto [f3, g3] = ratio_factor_functions(c, 3, 3);
    CHECK(f3 == RatFunc::constant(Rational(1)));

    // n=3, a=3: g = nu2 u/(u - q^3) + nu1^2 u/((1-q^2)(u - q^2))
    RatFunc expect =
        RatFunc(Poly::monomial(sv.nu_hat[2], 1), Poly{Rational(-8), Rational(1)}) +
        RatFunc(Poly::monomial(sv.nu_hat[1] * sv.nu_hat[1] / (Rational(1) - Rational(4)), 1),
                Poly{Rational(-4), Rational(1)});
    CHECK(g3 == expect);

    // n=3, a=1: g = 1 (empty composition on the other side)
    auto [f1, g1] = ratio_factor_functions(c, 3, 1);
    CHECK(g1 == RatFunc::constant(Rational(1)));
}
