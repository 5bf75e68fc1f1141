#include "nzeta/highrank.hpp"

#include <sstream>

namespace nzeta {

Rational composition_weight(const Composition& comp, const SpecialValues& sv, long q) {
    Rational w(1);
    for (int p : comp.parts) w *= sv.nu_hat[static_cast<std::size_t>(p)];
    for (std::size_t j = 0; j + 1 < comp.parts.size(); ++j)
        w /= Rational(1) - pow_int(q, comp.parts[j] + comp.parts[j + 1]);
    return w;
}

RatFunc uniformity_term(const Curve& c, int n, int a) {
    if (n < 1 || a < 1 || a > n) throw DomainViolation("uniformity_term: need 1 <= a <= n");
    SpecialValues sv = special_values(c, n);
    const long q = c.q;

    RatFunc k_sum;
    for (const auto& comp : compositions(n - a)) {
        Rational w = composition_weight(comp, sv, q);
        RatFunc factor = RatFunc::constant(Rational(1));
        if (!comp.parts.empty()) {
            // 1/(1 - q^{ns-n+a+k_p}) rewritten in T = q^{-ns}: T/(T - q^{a+k_p-n})
            long e = a + comp.parts.back() - n;
            factor = RatFunc(Poly::monomial(Rational(1), 1), Poly{-pow_int(q, e), Rational(1)});
        }
        k_sum = k_sum + w * factor;
    }

    RatFunc l_sum;
    for (const auto& comp : compositions(a - 1)) {
        Rational w = composition_weight(comp, sv, q);
        RatFunc factor = RatFunc::constant(Rational(1));
        if (!comp.parts.empty()) {
            // 1/(1 - q^{-ns+n-a+1+l_1}) = 1/(1 - q^{n-a+1+l_1} T)
            long e = n - a + 1 + comp.parts.front();
            factor = RatFunc(Poly{Rational(1)}, Poly{Rational(1), -pow_int(q, e)});
        }
        l_sum = l_sum + w * factor;
    }

    RatFunc zeta_shift = artin_zeta(c).scale_substitute(pow_int(q, n - a));
    return k_sum * zeta_shift * l_sum;
}

RatFunc sl_n_zeta(const Curve& c, int n) {
    if (n < 1) throw DomainViolation("sl_n_zeta: rank must be >= 1");
    RatFunc total;
    for (int a = 1; a <= n; ++a) total = total + uniformity_term(c, n, a);
    long e = static_cast<long>(n) * (n - 1) / 2 * (c.g - 1);
    return pow_int(c.q, e) * total;
}

bool verify_cancellation(const RatFunc& z, int n, long q, int g) {
    Rational Q = pow_int(q, n);
    Poly target = Poly::monomial(Rational(1), static_cast<std::size_t>(g - 1)) *
                  Poly{Rational(1), Rational(-1)} * Poly{Rational(1), -Q};
    auto [quo, rem] = Poly::divmod(target, z.den());
    (void)quo;
    return rem.is_zero();
}

ZetaBundle bundle(const Curve& c, int n) {
    if (n < 1) throw DomainViolation("bundle: rank must be >= 1");
    ZetaBundle b;
    b.n = n;
    b.Q = pow_int(c.q, n);
    b.zhat = sl_n_zeta(c, n);

    Poly shape = Poly::monomial(Rational(1), static_cast<std::size_t>(c.g - 1)) *
                 Poly{Rational(1), Rational(-1)} * Poly{Rational(1), -b.Q};
    Poly prod = b.zhat.num() * shape;
    auto [quo, rem] = Poly::divmod(prod, b.zhat.den());
    if (!rem.is_zero())
        throw StructureViolation("rank-" + std::to_string(n) +
                                 " zeta of '" + c.name + "': uncancelled denominator factors");
    b.numerator = quo;

    if (b.numerator.degree() != 2 * c.g)
        throw StructureViolation("rank-" + std::to_string(n) + " numerator of '" + c.name +
                                 "' does not have degree 2g");
    for (int i = 0; i <= c.g; ++i) {
        Rational lhs = b.numerator.coeff(static_cast<std::size_t>(2 * c.g - i));
        Rational rhs = b.Q.pow(c.g - i) * b.numerator.coeff(static_cast<std::size_t>(i));
        if (lhs != rhs)
            throw StructureViolation("rank-" + std::to_string(n) + " numerator of '" + c.name +
                                     "' breaks coefficient symmetry");
    }

    // alpha(mn) = m-th series coefficient of T^{g-1} * zhat, m = 0..g-1
    RatFunc shifted = RatFunc::from_poly(Poly::monomial(Rational(1),
                                         static_cast<std::size_t>(c.g - 1))) * b.zhat;
    b.alpha = shifted.taylor_coefficients(static_cast<std::size_t>(c.g));

    if (b.numerator.coeff(0) != b.alpha[0])
        throw StructureViolation("numerator constant term is not alpha(0) for '" + c.name + "'");
    if (b.numerator.leading() != b.Q.pow(c.g) * b.alpha[0])
        throw StructureViolation("numerator leading coefficient is not Q^g alpha(0) for '" +
                                 c.name + "'");

    b.beta0 = b.zhat.residue_simple(Rational(1));
    return b;
}

RatFunc zeta_from_invariants(const std::vector<Rational>& alpha, const Rational& beta0,
                             int n, int g, long q) {
    if (g < 1) throw DomainViolation("zeta_from_invariants: genus must be >= 1");
    if (alpha.size() != static_cast<std::size_t>(g))
        throw DomainViolation("zeta_from_invariants: alpha needs g entries");
    (void)n;
    Rational Q = pow_int(q, n);

    RatFunc acc = RatFunc::constant(alpha[static_cast<std::size_t>(g - 1)]);
    for (int m = 0; m <= g - 2; ++m) {
        std::size_t down = static_cast<std::size_t>(g - 1 - m);
        RatFunc neg_power(Poly{Rational(1)}, Poly::monomial(Rational(1), down));
        RatFunc pos_power = RatFunc::from_poly(Poly::monomial(Q.pow(g - 1 - m), down));
        acc = acc + alpha[static_cast<std::size_t>(m)] * (neg_power + pos_power);
    }
    RatFunc tail(Poly::monomial((Q - Rational(1)) * beta0, 1),
                 Poly{Rational(1), Rational(-1)} * Poly{Rational(1), -Q});
    return acc + tail;
}

}  // namespace nzeta
