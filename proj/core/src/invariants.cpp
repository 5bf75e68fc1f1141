#include "nzeta/invariants.hpp"

#include <sstream>

namespace nzeta {

namespace {
long binom2(int n) { return static_cast<long>(n) * (n - 1) / 2; }
}

Rational beta_total(const Curve& c, int n) {
    if (n < 1) throw DomainViolation("beta_total: rank must be >= 1");
    SpecialValues sv = special_values(c, n);
    return pow_int(c.q, binom2(n) * (c.g - 1)) * sv.nu_hat[static_cast<std::size_t>(n)];
}

Rational beta_zagier(const Curve& c, int n, long d) {
    if (n < 1) throw DomainViolation("beta_zagier: rank must be >= 1");
    SpecialValues sv = special_values(c, n);
    const long q = c.q;
    Rational total(0);
    for (const auto& comp : compositions(n)) {
        Rational w(1);
        for (int p : comp.parts) w *= sv.nu_hat[static_cast<std::size_t>(p)];
        Rational exponent(0);
        long partial = 0;
        for (std::size_t j = 0; j + 1 < comp.parts.size(); ++j) {
            partial += comp.parts[j];
            w /= Rational(1) - pow_int(q, comp.parts[j] + comp.parts[j + 1]);
            Rational frac = (Rational(partial) * Rational(d) / Rational(n)).fract();
            exponent += Rational(comp.parts[j] + comp.parts[j + 1]) * frac;
        }
        if (!exponent.is_integer()) {
            std::ostringstream os;
            os << "beta formula exponent " << exponent.str() << " is not an integer (n=" << n
               << ", d=" << d << ")";
            throw NonIntegralExponent(os.str());
        }
        total += w * pow_int(q, exponent.numerator().get_si());
    }
    return pow_int(q, binom2(n) * (c.g - 1)) * total;
}

bool counting_miracle_check(const Curve& c, int n) {
    if (n < 2) throw DomainViolation("counting_miracle_check: rank must be >= 2");
    Rational lhs = bundle(c, n).alpha[0];
    Rational rhs = pow_int(c.q, static_cast<long>(n - 1) * (c.g - 1)) * beta_zagier(c, n - 1, 0);
    return lhs == rhs;
}

Rational alpha_large(const Curve& c, int n, long m) {
    if (n < 1) throw DomainViolation("alpha_large: rank must be >= 1");
    if (m < 0) return Rational(0);
    const long threshold = 2L * (c.g - 1);  // m n > 2n(g-1)  <=>  m > 2(g-1)
    if (m > threshold) {
        Rational beta0 = beta_zagier(c, n, 0);
        return beta0 * (pow_int(c.q, m * n - static_cast<long>(n) * (c.g - 1)) - Rational(1));
    }
    ZetaBundle b = bundle(c, n);
    RatFunc shifted = RatFunc::from_poly(Poly::monomial(Rational(1),
                                         static_cast<std::size_t>(c.g - 1))) * b.zhat;
    auto coeffs = shifted.taylor_coefficients(static_cast<std::size_t>(m) + 1);
    return coeffs[static_cast<std::size_t>(m)];
}

bool beta_relation_check(const Curve& c, int n) {
    if (n < 1) throw DomainViolation("beta_relation_check: rank must be >= 1");
    Rational base = beta_zagier(c, n, 0);
    for (long m : {-2L, -1L, 1L, 2L})
        if (beta_zagier(c, n, m * n) != base) return false;
    return base == bundle(c, n).beta0;
}

}  // namespace nzeta
