#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nzeta/curve.hpp"

using namespace nzeta;

namespace {
Rational rat(const char* s) { return Rational::from_string(s); }
}

TEST_CASE("curve reconstruction from point counts") {
    // y^2+y = x^3 over F_2: 3 points -> P(t) = 1 + 2t^2
    Curve e0 = curve_from_point_counts("E0", 2, 1, {3});
    CHECK(e0.p_coeffs == std::vector<Rational>{Rational(1), Rational(0), Rational(2)});

    // y^2+y = x^5 over F_2: N1 = 3, N2 = 5 (enumerated) -> P(t) = 1 + 4t^4
    Curve c5 = curve_from_point_counts("C5", 2, 2, {3, 5});
    CHECK(c5.p_coeffs == std::vector<Rational>{Rational(1), Rational(0), Rational(0),
                                               Rational(0), Rational(4)});

    // Weil bound forces a violation for N1 = 10 at q = 2
    CHECK_THROWS_AS(curve_from_point_counts("bad", 2, 1, {10}), WeilViolation);
}

TEST_CASE("synthetic curves from traces") {
    Curve a = synth_curve("s1", 2, 1, {0});
    CHECK(a.p_coeffs == std::vector<Rational>{Rational(1), Rational(0), Rational(2)});

    Curve b = synth_curve("s2", 3, 2, {1, -2});
    Poly expect = Poly{Rational(1), Rational(-1), Rational(3)} *
                  Poly{Rational(1), Rational(2), Rational(3)};
    CHECK(Poly(b.p_coeffs) == expect);

    CHECK_THROWS_AS(synth_curve("s3", 2, 1, {3}), TraceOutOfRange);
    // boundary a^2 = 4q allowed (real reciprocal roots of modulus sqrt(q))
    CHECK_NOTHROW(synth_curve("s4", 4, 1, {4}));
}

TEST_CASE("curve invariants and validation") {
    Curve e0 = curve_from_point_counts("E0", 2, 1, {3});
    for (int i = 0; i <= e0.g; ++i)
        CHECK(e0.p_coeffs[2 * e0.g - i] == pow_int(e0.q, e0.g - i) * e0.p_coeffs[i]);

    // symmetric but non-Weil coefficients must be rejected numerically
    std::vector<Rational> sym{Rational(1), Rational(4), Rational(2)};  // roots real, |w| != sqrt2
    CHECK_THROWS_AS(curve_from_coefficients("bad", 2, 1, sym), WeilViolation);

    CHECK_THROWS_AS(curve_from_point_counts("g0", 2, 0, {}), DomainViolation);
}

TEST_CASE("artin zeta and the functional equation") {
    Curve e0 = curve_from_point_counts("E0", 2, 1, {3});
    RatFunc z = artin_zeta(e0);
    RatFunc expect(Poly{Rational(1), Rational(0), Rational(2)},
                   Poly{Rational(1), Rational(-1)} * Poly{Rational(1), Rational(-2)});
    CHECK(z == expect);
    CHECK(z.invert_substitute(Rational(2)) == z);

    Curve g2 = synth_curve("g2", 3, 2, {1, -2});
    RatFunc z2 = artin_zeta(g2);
    Poly den = Poly::monomial(Rational(1), 1) * Poly{Rational(1), Rational(-1)} *
               Poly{Rational(1), Rational(-3)};
    CHECK(z2.den() == den.monic());
    CHECK(z2.invert_substitute(Rational(3)) == z2);
}

TEST_CASE("special values") {
    Curve e0 = curve_from_point_counts("E0", 2, 1, {3});
    SpecialValues sv = special_values(e0, 3);
    CHECK(sv.zeta_at[1] == Rational(3));
    CHECK(sv.zeta_at[2] == Rational(3));
    CHECK(sv.zeta_at[3] == rat("11/7"));
    CHECK(sv.nu_hat[1] == Rational(3));
    CHECK(sv.nu_hat[2] == Rational(9));
    CHECK(sv.nu_hat[3] == rat("99/7"));

    // zeta_at[1] * (q-1) = P(1) = #Pic^0
    CHECK(sv.zeta_at[1] * Rational(e0.q - 1) == Poly(e0.p_coeffs).eval(Rational(1)));

    Curve s = synth_curve("s", 3, 1, {0});
    CHECK(special_values(s, 1).zeta_at[1] == Rational(2));  // P(1)/(q-1) = 4/2
}

TEST_CASE("point counts round-trip through the numerator") {
    Curve c5 = curve_from_point_counts("C5", 2, 2, {3, 5});
    auto counts = point_counts_from_curve(c5, 4);
    CHECK(counts[0] == 3);
    CHECK(counts[1] == 5);
    // degree-4 extension count from the numerator is consistent with Weil:
    // N4 = q^4 + 1 - S4
    Curve g2 = synth_curve("g2", 3, 2, {1, -2});
    auto back = point_counts_from_curve(g2, 2);
    Curve again = curve_from_point_counts("g2b", 3, 2,
                                          {back[0].get_si(), back[1].get_si()});
    CHECK(again.p_coeffs == g2.p_coeffs);
}

TEST_CASE("positivity of special values on Weil-valid curves") {
    for (const Curve& c : {curve_from_point_counts("E0", 2, 1, {3}),
                           curve_from_point_counts("C5", 2, 2, {3, 5}),
                           synth_curve("g2", 3, 2, {1, -2}),
                           synth_curve("g3", 2, 3, {0, 1, -1})}) {
        SpecialValues sv = special_values(c, 5);
        for (int k = 1; k <= 5; ++k) CHECK(sv.zeta_at[k] > Rational(0));
        for (int k = 1; k <= 5; ++k) CHECK(sv.nu_hat[k] > Rational(0));
    }
}

TEST_CASE("prime power detection") {
    CHECK(is_prime_power(2));
    CHECK(is_prime_power(4));
    CHECK(is_prime_power(27));
    CHECK(is_prime_power(31));
    CHECK_FALSE(is_prime_power(6));
    CHECK_FALSE(is_prime_power(1));
    CHECK_FALSE(is_prime_power(12));
}
