#include "nzeta/curve.hpp"

#include <cmath>
#include <sstream>

#include "nzeta/roots.hpp"

namespace nzeta {

bool is_prime_power(long q) {
    if (q < 2) return false;
    for (long p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            while (q % p == 0) q /= p;
            return q == 1;
        }
    }
    return true;  // prime
}

namespace {

void check_basics(const Curve& c) {
    if (c.g < 1) throw DomainViolation("genus must be >= 1 (curve '" + c.name + "')");
    if (c.q < 2) throw DomainViolation("base field size must be >= 2 (curve '" + c.name + "')");
    const std::size_t want = 2 * static_cast<std::size_t>(c.g) + 1;
    if (c.p_coeffs.size() != want)
        throw DomainViolation("numerator of curve '" + c.name + "' must have degree exactly 2g");
    if (c.p_coeffs[0] != Rational(1))
        throw DomainViolation("numerator constant term must be 1 (curve '" + c.name + "')");
    if (c.p_coeffs.back().is_zero())
        throw DomainViolation("numerator of curve '" + c.name + "' must have degree exactly 2g");
}

// Elementary symmetric functions e_1..e_upto of the reciprocal roots from the
// first power sums S_1..S_upto (Newton's identities).
std::vector<Rational> elementary_from_power_sums(const std::vector<Rational>& S, int upto) {
    std::vector<Rational> e(static_cast<std::size_t>(upto) + 1, Rational(0));
    e[0] = Rational(1);
    for (int k = 1; k <= upto; ++k) {
        Rational acc(0);
        for (int i = 1; i <= k; ++i) {
            Rational term = e[static_cast<std::size_t>(k - i)] * S[static_cast<std::size_t>(i)];
            if (i % 2 == 0) acc -= term;
            else acc += term;
        }
        e[static_cast<std::size_t>(k)] = acc / Rational(k);
    }
    return e;
}

}  // namespace

void validate_curve(const Curve& c, const ValidationOptions& opts) {
    check_basics(c);
    // exact functional-equation symmetry c_{2g-i} = q^{g-i} c_i
    for (int i = 0; i <= c.g; ++i) {
        Rational lhs = c.p_coeffs[static_cast<std::size_t>(2 * c.g - i)];
        Rational rhs = pow_int(c.q, c.g - i) * c.p_coeffs[static_cast<std::size_t>(i)];
        if (lhs != rhs) {
            std::ostringstream os;
            os << "curve '" << c.name << "': coefficient symmetry fails at i=" << i
               << " (" << lhs.str() << " != " << rhs.str() << ")";
            throw WeilViolation(os.str());
        }
    }
    // numeric root-modulus check |omega| = sqrt(q)
    Poly p(c.p_coeffs);
    auto roots = find_roots(p, opts.precision);
    BigFloat target = BigFloat::of(c.q, opts.precision).sqrt();
    BigFloat tol = BigFloat::of(opts.weil_rel_tol, opts.precision);
    for (const auto& t : roots) {
        // reciprocal root modulus = 1/|t|
        BigFloat m = BigFloat::of(1L, opts.precision) / t.abs();
        BigFloat dev = ((m - target) / target).abs();
        if (dev > tol) {
            std::ostringstream os;
            os << "curve '" << c.name << "': reciprocal root modulus " << m.str(12)
               << " deviates from sqrt(q) = " << target.str(12);
            throw WeilViolation(os.str());
        }
    }
}

Curve curve_from_point_counts(const std::string& name, long q, int g,
                              const std::vector<long>& counts,
                              const ValidationOptions& opts) {
    if (g < 1) throw DomainViolation("genus must be >= 1");
    if (counts.size() != static_cast<std::size_t>(g))
        throw DomainViolation("need exactly g point counts for curve '" + name + "'");
    for (long n : counts)
        if (n < 0) throw DomainViolation("negative point count for curve '" + name + "'");

    // S_i = q^i + 1 - N_i are the power sums of the reciprocal roots
    std::vector<Rational> S(static_cast<std::size_t>(g) + 1, Rational(0));
    for (int i = 1; i <= g; ++i)
        S[static_cast<std::size_t>(i)] =
            pow_int(q, i) + Rational(1) - Rational(counts[static_cast<std::size_t>(i - 1)]);
    auto e = elementary_from_power_sums(S, g);

    std::vector<Rational> coeffs(2 * static_cast<std::size_t>(g) + 1, Rational(0));
    for (int k = 0; k <= g; ++k) {
        Rational ck = e[static_cast<std::size_t>(k)];
        if (k % 2 == 1) ck = -ck;
        coeffs[static_cast<std::size_t>(k)] = ck;
    }
    for (int i = 0; i < g; ++i)
        coeffs[static_cast<std::size_t>(2 * g - i)] =
            pow_int(q, g - i) * coeffs[static_cast<std::size_t>(i)];

    Curve c{name, q, g, std::move(coeffs)};
    validate_curve(c, opts);
    return c;
}

Curve curve_from_coefficients(const std::string& name, long q, int g,
                              std::vector<Rational> coeffs, const ValidationOptions& opts) {
    Curve c{name, q, g, std::move(coeffs)};
    validate_curve(c, opts);
    return c;
}

Curve synth_curve(const std::string& name, long q, int g, const std::vector<long>& traces) {
    if (g < 1) throw DomainViolation("genus must be >= 1");
    if (traces.size() != static_cast<std::size_t>(g))
        throw DomainViolation("need exactly g traces for curve '" + name + "'");
    Poly p{Rational(1)};
    for (long a : traces) {
        if (a * a > 4 * q) {
            std::ostringstream os;
            os << "trace " << a << " violates a^2 <= 4q for q = " << q;
            throw TraceOutOfRange(os.str());
        }
        p = p * Poly{Rational(1), Rational(-a), Rational(q)};
    }
    Curve c{name, q, g, p.coeffs()};
    check_basics(c);
    return c;
}

std::vector<mpz_class> point_counts_from_curve(const Curve& c, int upto) {
    check_basics(c);
    // power sums from all 2g elementary symmetric functions, Newton again
    const int m = 2 * c.g;
    std::vector<Rational> e(static_cast<std::size_t>(m) + 1, Rational(0));
    for (int k = 0; k <= m; ++k) {
        Rational ek = c.p_coeffs[static_cast<std::size_t>(k)];
        if (k % 2 == 1) ek = -ek;
        e[static_cast<std::size_t>(k)] = ek;
    }
    std::vector<Rational> S(static_cast<std::size_t>(upto) + 1, Rational(0));
    for (int k = 1; k <= upto; ++k) {
        Rational acc(0);
        for (int i = 1; i < k && i <= m; ++i) {
            Rational term = e[static_cast<std::size_t>(i)] * S[static_cast<std::size_t>(k - i)];
            if (i % 2 == 0) acc += term;
            else acc -= term;
        }
        // p_k = e1 p_{k-1} - e2 p_{k-2} + ... + (-1)^{k-1} k e_k  (e_i = 0, i > 2g)
        acc = -acc;
        if (k <= m) {
            Rational last = Rational(k) * e[static_cast<std::size_t>(k)];
            if (k % 2 == 0) last = -last;
            acc += last;
        }
        S[static_cast<std::size_t>(k)] = acc;
    }
    std::vector<mpz_class> counts;
    counts.reserve(static_cast<std::size_t>(upto));
    for (int i = 1; i <= upto; ++i) {
        Rational n = pow_int(c.q, i) + Rational(1) - S[static_cast<std::size_t>(i)];
        if (!n.is_integer())
            throw StructureViolation("non-integral point count recovered for '" + c.name + "'");
        counts.push_back(n.numerator());
    }
    return counts;
}

RatFunc artin_zeta(const Curve& c) {
    Poly den = Poly::monomial(Rational(1), static_cast<std::size_t>(c.g - 1)) *
               Poly{Rational(1), Rational(-1)} * Poly{Rational(1), Rational(-c.q)};
    return RatFunc(Poly(c.p_coeffs), den);
}

SpecialValues special_values(const Curve& c, int n_max) {
    if (n_max < 1) throw DomainViolation("special_values needs n_max >= 1");
    RatFunc z = artin_zeta(c);
    SpecialValues sv;
    sv.zeta_at.assign(static_cast<std::size_t>(n_max) + 1, Rational(0));
    sv.nu_hat.assign(static_cast<std::size_t>(n_max) + 1, Rational(1));
    sv.zeta_at[1] = z.residue_simple(Rational(1));
    for (int k = 2; k <= n_max; ++k)
        sv.zeta_at[static_cast<std::size_t>(k)] = z.evaluate(pow_int(c.q, -k));
    for (int k = 1; k <= n_max; ++k)
        sv.nu_hat[static_cast<std::size_t>(k)] =
            sv.nu_hat[static_cast<std::size_t>(k - 1)] * sv.zeta_at[static_cast<std::size_t>(k)];
    return sv;
}

}  // namespace nzeta
