#include "nzeta/ranklow.hpp"

#include <cmath>
#include <sstream>

namespace nzeta {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// xorshift-based uniform doubles in [0,1); reproducible everywhere
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

std::uint64_t mix_seed(std::uint64_t seed, const std::string& name) {
    std::uint64_t h = 1469598103934665603ull ^ seed;
    for (unsigned char ch : name) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

BigComplex cpow_int(const BigComplex& z, long e, mpfr_prec_t prec) {
    BigComplex r = BigComplex::of(Rational(1), prec);
    if (e >= 0) {
        for (long i = 0; i < e; ++i) r = r * z;
        return r;
    }
    for (long i = 0; i < -e; ++i) r = r * z;
    return BigComplex::of(Rational(1), prec) / r;
}

// completed zeta at a complex point t: P(t) / (t^{g-1}(1-t)(1-qt));
// null when a denominator factor is too close to zero.
bool zhat_eval(const Curve& c, const BigComplex& t, mpfr_prec_t prec, BigComplex& out) {
    BigComplex one = BigComplex::of(Rational(1), prec);
    BigComplex num(prec);
    for (std::size_t i = c.p_coeffs.size(); i-- > 0;)
        num = num * t + BigComplex::of(c.p_coeffs[i], prec);
    BigComplex d1 = one - t;
    BigComplex d2 = one - BigComplex::of(Rational(c.q), prec) * t;
    BigComplex tp = cpow_int(t, c.g - 1, prec);
    BigFloat eps = BigFloat::pow2(-static_cast<long>(prec) / 2, prec);
    if (d1.abs() < eps || d2.abs() < eps || tp.abs() < eps) return false;
    out = num / (tp * d1 * d2);
    return true;
}

}  // namespace

RatFunc sl2_zeta_formula(const Curve& c) {
    RatFunc z = artin_zeta(c);
    long q = c.q;
    // Zhat(T)/(1 - q^2 T) - Zhat(qT) * T/(1 - T)
    RatFunc first = z * RatFunc(Poly{Rational(1)}, Poly{Rational(1), -pow_int(q, 2)});
    RatFunc second = z.scale_substitute(Rational(q)) *
                     RatFunc(Poly::monomial(Rational(1), 1), Poly{Rational(1), Rational(-1)});
    return first - second;
}

Ordering yoshida_compare(std::complex<double> alpha, std::complex<double> beta, double q,
                         double kappa, std::complex<double> w) {
    if (!(q > 1.0)) throw DomainViolation("yoshida_compare: q must be > 1");
    if (kappa < 0.0) throw DomainViolation("yoshida_compare: kappa must be >= 0");
    std::complex<double> prod = alpha * beta;
    if (std::abs(prod - q) > 1e-12 * q)
        throw DomainViolation("yoshida_compare: alpha*beta != q");
    std::complex<double> sum = alpha + beta;
    if (std::abs(sum.imag()) > 1e-12 * (1.0 + std::abs(sum)))
        throw DomainViolation("yoshida_compare: alpha+beta not real");
    if (std::abs(sum.real()) > (q + 1.0) * (1.0 + 1e-12))
        throw DomainViolation("yoshida_compare: |alpha+beta| > q+1");

    double qk = std::pow(q, kappa);
    double lhs = std::abs(w - alpha * qk) * std::abs(w - beta * qk);
    double rhs = std::abs(1.0 - alpha * qk * w) * std::abs(1.0 - beta * qk * w);
    double scale = std::max({lhs, rhs, 1e-300});
    if (std::abs(lhs - rhs) <= 1e-12 * scale) return Ordering::EQ;
    return lhs > rhs ? Ordering::GT : Ordering::LT;
}

double yoshida_gap(double q, double x) {
    return std::pow(q, 2.0 * x + 1.0) + 1.0 - std::pow(q, x) * (q + 1.0);
}

YoshidaScan yoshida_scan(double q, long long per_side, std::uint64_t seed) {
    YoshidaScan scan;
    Rng rng(seed);
    for (int side = 0; side < 2; ++side) {
        for (long long i = 0; i < per_side; ++i) {
            std::complex<double> a, b;
            if (rng.uniform() < 0.25) {
                // real admissible pair r, q/r with r in [1, q]
                double r = std::pow(q, rng.uniform());
                a = r;
                b = q / r;
            } else {
                double theta = rng.uniform(0.0, kTwoPi / 2.0);
                a = std::sqrt(q) * std::complex<double>(std::cos(theta), std::sin(theta));
                b = std::conj(a);
            }
            double kappa = rng.uniform(0.0, 3.0);
            double mod = side == 0 ? rng.uniform(1e-3, 1.0 - 1e-6)
                                   : rng.uniform(1.0 + 1e-6, 3.0);
            double phi = rng.uniform(0.0, kTwoPi);
            std::complex<double> w = mod * std::complex<double>(std::cos(phi), std::sin(phi));
            Ordering got = yoshida_compare(a, b, q, kappa, w);
            Ordering want = side == 0 ? Ordering::GT : Ordering::LT;
            ++scan.samples;
            if (got == Ordering::EQ && std::abs(std::abs(w) - 1.0) > 1e-6) ++scan.unexpected_eq;
            if (got != want) ++scan.violations;
        }
    }
    return scan;
}

Rank3Parts rank3_parts(const Curve& c) {
    Rank3Parts p;
    p.z1 = uniformity_term(c, 3, 1);
    p.z2 = uniformity_term(c, 3, 2);
    p.z3 = uniformity_term(c, 3, 3);
    Rational half(1, 2);
    p.z_ge2 = half * p.z2 + p.z3;
    p.z_le2 = p.z1 + half * p.z2;

    RatFunc sum = p.z1 + p.z2 + p.z3;
    if (sum != p.z_le2 + p.z_ge2)
        throw StructureViolation("rank-3 halves do not sum back ('" + c.name + "')");
    Rational constant = pow_int(c.q, 3L * (c.g - 1));
    if (constant * sum != sl_n_zeta(c, 3))
        throw StructureViolation("rank-3 term sum does not match the assembled zeta ('" +
                                 c.name + "')");
    Rational Q = pow_int(c.q, 3);
    if (p.z_le2.invert_substitute(Q) != p.z_ge2)
        throw StructureViolation("rank-3 halves are not functional-equation mirrors ('" +
                                 c.name + "')");
    return p;
}

CircleVerdict rh_third_line(const Rank3Parts& parts, const Curve& c, double tolerance,
                            mpfr_prec_t prec) {
    // roots T of the z_ge2 numerator must satisfy |T| = 1/q, i.e. the
    // reciprocal roots must have modulus q
    BigFloat target = BigFloat::of(c.q, prec);
    return reciprocal_roots_on_circle(parts.z_ge2.num(), target, tolerance, prec);
}

PredicateReport check_reflected_zeta_ratio(const Curve& c, int n, int a,
                                           long long samples_per_side, std::uint64_t seed,
                                           mpfr_prec_t prec) {
    if (n < 2 || a < 1 || a > n) throw DomainViolation("check_reflected_zeta_ratio: bad (n, a)");
    const int b = n + 1 - a;
    PredicateReport rep;
    Rng rng(mix_seed(seed, c.name + "#refl" + std::to_string(a)));

    BigFloat q_bf = BigFloat::of(c.q, prec);
    BigFloat sqrt_q = q_bf.sqrt();
    BigFloat qk = sqrt_q.pow_si(n - 2 * a);  // q^{n/2 - a}
    BigComplex qk_c(qk, BigFloat(prec));
    BigComplex one = BigComplex::of(Rational(1), prec);
    BigComplex qc = BigComplex::of(Rational(c.q), prec);
    const double y_period = kTwoPi / (n * std::log(static_cast<double>(c.q)));
    BigFloat rel_margin = BigFloat::pow2(-static_cast<long>(prec) / 3, prec);

    auto sample_at = [&](double x, double y, bool boundary) {
        BigComplex nsigma(BigFloat::of(n * x, prec), BigFloat::of(n * y, prec));
        BigComplex w = pow_complex(q_bf, nsigma);
        BigComplex t1 = qk_c / w;  // q^{-(ns-n+a)}
        BigComplex t2 = qk_c * w;  // q^{-(1-ns+n-b)}
        BigComplex zv1(prec), zv2(prec);
        if (!zhat_eval(c, t1, prec, zv1) || !zhat_eval(c, t2, prec, zv2) || zv2.is_zero()) {
            ++rep.skipped_at_pole;
            return;
        }
        BigComplex md = ((one - qk_c * w) * (one - qc * qk_c * w)) /
                        ((w - qk_c) * (w - qc * qk_c));
        BigFloat ratio = zv1.abs() / zv2.abs();
        BigFloat mid = md.abs();
        if (boundary) {
            ++rep.boundary;
            BigFloat dev = ((ratio / mid) - BigFloat::of(1L, prec)).abs();
            BigFloat dev1 = (ratio - BigFloat::of(1L, prec)).abs();
            if (dev > BigFloat::of(1e-9, prec) || dev1 > BigFloat::of(1e-9, prec))
                ++rep.boundary_violations;
            return;
        }
        ++rep.samples;
        if (a == b) {
            ++rep.identity;
            BigFloat dev = ((ratio / mid) - BigFloat::of(1L, prec)).abs();
            if (dev > BigFloat::of(1e-9, prec)) ++rep.violations;
            return;
        }
        BigFloat diff = ratio - mid;
        if (diff.abs() <= rel_margin * mid) return;  // too close to call: not a violation
        bool gt = diff.sign() > 0;
        bool expect_gt = (x < 0.0) != (a > b);
        if (gt != expect_gt) ++rep.violations;
    };

    for (long long i = 0; i < samples_per_side; ++i) {
        double mag = rng.uniform(0.02, 0.45);
        double y = rng.uniform(0.0, y_period);
        sample_at(-mag, y, false);
        mag = rng.uniform(0.02, 0.45);
        y = rng.uniform(0.0, y_period);
        sample_at(mag, y, false);
    }
    long long nb = samples_per_side < 64 ? samples_per_side : 64;
    for (long long i = 0; i < nb; ++i) sample_at(0.0, rng.uniform(0.0, y_period), true);
    return rep;
}

PredicateReport check_adjacent_zeta_ratio(const Curve& c, int n, int a,
                                          long long samples_per_side, std::uint64_t seed,
                                          mpfr_prec_t prec) {
    if (n < 2 || a < 1 || a >= n) throw DomainViolation("check_adjacent_zeta_ratio: bad (n, a)");
    PredicateReport rep;
    Rng rng(mix_seed(seed, c.name + "#adj" + std::to_string(a)));

    BigFloat q_bf = BigFloat::of(c.q, prec);
    BigFloat sqrt_q = q_bf.sqrt();
    BigFloat qk = sqrt_q.pow_si(n - 2 * a);  // threshold modulus for q^{n sigma}
    BigComplex qk_c(qk, BigFloat(prec));
    BigComplex one = BigComplex::of(Rational(1), prec);
    BigComplex qc = BigComplex::of(Rational(c.q), prec);
    Rational inv_q(1, c.q);
    const double x0 = 0.5 - static_cast<double>(a) / n;  // threshold in Re(sigma)
    const double y_period = kTwoPi / (n * std::log(static_cast<double>(c.q)));
    BigFloat rel_margin = BigFloat::pow2(-static_cast<long>(prec) / 3, prec);

    auto sample_at = [&](double x, double y, bool below_threshold) {
        BigComplex nsigma(BigFloat::of(n * x, prec), BigFloat::of(n * y, prec));
        BigComplex w = pow_complex(q_bf, nsigma);
        BigComplex t1 = qk_c / w;  // q^{-(n sigma - n/2 + a)}
        BigComplex t2 = t1 * BigComplex::of(inv_q, prec);
        BigComplex zv1(prec), zv2(prec);
        if (!zhat_eval(c, t1, prec, zv1) || !zhat_eval(c, t2, prec, zv2) || zv2.is_zero()) {
            ++rep.skipped_at_pole;
            return;
        }
        BigComplex denom = one - qc * t1;
        if (denom.is_zero()) {
            ++rep.skipped_at_pole;
            return;
        }
        BigComplex md = (qc - t1) / denom;
        BigFloat ratio = zv1.abs() / zv2.abs();
        BigFloat mid = md.abs();
        ++rep.samples;
        BigFloat diff = ratio - mid;
        if (diff.abs() <= rel_margin * mid) return;
        bool gt = diff.sign() > 0;
        if (gt != below_threshold) ++rep.violations;
    };

    for (long long i = 0; i < samples_per_side; ++i) {
        double mag = rng.uniform(0.02, 0.45);
        double y = rng.uniform(0.0, y_period);
        sample_at(x0 - mag, y, true);
        mag = rng.uniform(0.02, 0.45);
        y = rng.uniform(0.0, y_period);
        sample_at(x0 + mag, y, false);
    }
    return rep;
}

UnitDiscReport check_unit_disc_containment(const Curve& c) {
    SpecialValues sv = special_values(c, 2);
    UnitDiscReport r;
    const long q = c.q;
    r.ratio = sv.nu_hat[2] / (sv.nu_hat[1] * sv.nu_hat[1]);
    r.threshold_a = Rational(q) / (pow_int(q, 2) - Rational(1));
    r.threshold_b = Rational(3, 2) / Rational(q - 1);
    r.ratio_gt_a = r.ratio > r.threshold_a;
    r.ratio_gt_b = r.ratio > r.threshold_b;

    Rational one_m_q2 = Rational(1) - pow_int(q, 2);
    Rational denom = Rational(q) * r.ratio + pow_int(q, 2) / one_m_q2;
    r.radius_defined = denom > Rational(0);
    if (r.radius_defined) {
        r.center = (r.ratio + Rational(1) / one_m_q2) / denom;
        r.radius = Rational(1) / (Rational(2) * denom);
        r.contained = (r.center - r.radius > Rational(-1)) && (r.center + r.radius < Rational(1));
    }
    return r;
}

std::pair<RatFunc, RatFunc> ratio_factor_functions(const Curve& c, int n, int a) {
    if (n < 1 || a < 1 || a > n) throw DomainViolation("ratio_factor_functions: bad (n, a)");
    SpecialValues sv = special_values(c, n);
    const long q = c.q;

    // f: sum over compositions of n-a, tail factor 1/(1 - q^{a+k_p-n} u)
    RatFunc f;
    for (const auto& comp : compositions(n - a)) {
        Rational w = composition_weight(comp, sv, q);
        RatFunc factor = RatFunc::constant(Rational(1));
        if (!comp.parts.empty()) {
            long e = a + comp.parts.back() - n;
            factor = RatFunc(Poly{Rational(1)}, Poly{Rational(1), -pow_int(q, e)});
        }
        f = f + w * factor;
    }

    // g: sum over compositions of a-1, head factor u/(u - q^{n-a+1+l_1})
    RatFunc g;
    for (const auto& comp : compositions(a - 1)) {
        Rational w = composition_weight(comp, sv, q);
        RatFunc factor = RatFunc::constant(Rational(1));
        if (!comp.parts.empty()) {
            long e = n - a + 1 + comp.parts.front();
            factor = RatFunc(Poly::monomial(Rational(1), 1), Poly{-pow_int(q, e), Rational(1)});
        }
        g = g + w * factor;
    }
    return {f, g};
}

}  // namespace nzeta
