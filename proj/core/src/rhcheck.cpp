#include "nzeta/rhcheck.hpp"

#include <sstream>

#include "nzeta/invariants.hpp"

namespace nzeta {

CircleVerdict reciprocal_roots_on_circle(const Poly& p, const BigFloat& target_recip,
                                         double tolerance, mpfr_prec_t prec,
                                         mpfr_prec_t max_prec) {
    for (mpfr_prec_t pr = prec;; pr *= 2) {
        try {
            CircleVerdict v(pr);
            v.tolerance = tolerance;
            BigFloat target(target_recip);
            v.target = target;
            v.roots = find_roots(p, pr);
            BigFloat maxdev(pr);
            BigFloat one = BigFloat::of(1L, pr);
            for (const auto& r : v.roots) {
                BigFloat m = one / r.abs();
                v.moduli.push_back(m);
                BigFloat dev = ((m - target) / target).abs();
                if (dev > maxdev) maxdev = dev;
            }
            v.max_rel_deviation = maxdev;
            v.holds = !(maxdev > BigFloat::of(tolerance, pr));
            return v;
        } catch (const NonConvergence&) {
            if (pr * 2 > max_prec) throw;
        }
    }
}

RhVerdict rh_verdict(const ZetaBundle& b, long q, double tolerance, mpfr_prec_t prec) {
    BigFloat target = BigFloat::of(b.Q, prec).sqrt();
    CircleVerdict cv = reciprocal_roots_on_circle(b.numerator, target, tolerance, prec);

    RhVerdict v(cv.precision_bits);
    v.holds = cv.holds;
    v.n = b.n;
    v.Q = b.Q;
    v.tolerance = tolerance;
    v.target = cv.target;
    v.max_rel_deviation = cv.max_rel_deviation;
    v.roots_T = cv.roots;
    v.moduli = cv.moduli;

    const mpfr_prec_t pr = cv.precision_bits;
    BigFloat one = BigFloat::of(1L, pr);
    BigFloat nlogq = BigFloat::of(static_cast<long>(b.n), pr) * BigFloat::of(q, pr).log();
    for (const auto& r : v.roots_T) {
        BigFloat a2 = r.abs();
        BigFloat d = a2 * a2;
        v.recip_roots.push_back(BigComplex(r.re / d, -r.im / d));
        v.s_lines.push_back(-(a2.log()) / nlogq);
    }
    return v;
}

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        default: return "indeterminate";
    }
}

namespace {

Verdict between(const Interval& lo, const Interval& val, const Interval& hi) {
    Cmp3 a = leq(lo, val), b = leq(val, hi);
    if (a == Cmp3::True && b == Cmp3::True) return Verdict::Pass;
    if (a == Cmp3::False || b == Cmp3::False) return Verdict::Fail;
    return Verdict::Indeterminate;
}

InequalityCheck row(const std::string& name, const Interval& lo, const Rational& value,
                    const Interval& hi, mpfr_prec_t prec) {
    InequalityCheck r;
    r.name = name;
    r.lower = lo.str();
    r.value = value.str();
    r.upper = hi.str();
    r.verdict = between(lo, Interval::of(value, prec), hi);
    return r;
}

mpz_class binom(long n, long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

// sum_{k=3}^{m+1} Q^{k-3} sum_{i=1}^{k} C(2g, i-1) Q^{(i-1)/2}
Interval chain_correction(int m, int g, const Interval& Q, const Interval& sqrtQ,
                          mpfr_prec_t prec) {
    Interval total = Interval::of(0L, prec);
    for (int k = 3; k <= m + 1; ++k) {
        Interval inner = Interval::of(0L, prec);
        for (int i = 1; i <= k; ++i)
            inner = inner + Interval::of(binom(2 * g, i - 1), prec) *
                                sqrtQ.pow_ui(static_cast<unsigned long>(i - 1));
        total = total + Q.pow_ui(static_cast<unsigned long>(k - 3)) * inner;
    }
    return total;
}

Interval geometric_sum(int m, const Interval& Q, mpfr_prec_t prec) {
    Interval s = Interval::of(0L, prec);
    for (int j = 0; j <= m; ++j) s = s + Q.pow_ui(static_cast<unsigned long>(j));
    return s;
}

}  // namespace

std::vector<InequalityCheck> check_rough_bounds(const Curve& c, int n, mpfr_prec_t prec) {
    ZetaBundle b = bundle(c, n);
    const int g = c.g;
    Rational a0 = b.alpha[0];
    Interval Q = Interval::of(b.Q, prec);
    Interval sqrtQ = Q.sqrt();
    Interval twog = Interval::of(2L * g, prec);

    std::vector<InequalityCheck> out;

    if (g >= 2) {
        // (Q+1) - 2g sqrt(Q) <= alpha'(n) <= (Q+1) + 2g sqrt(Q)
        Rational a1p = b.alpha[1] / a0;
        Interval base = Q + Interval::of(1L, prec);
        Interval width = twog * sqrtQ;
        out.push_back(row("alpha'(n)", base - width, a1p, base + width, prec));
    }

    for (int m = 2; m <= g - 1; ++m) {
        Rational amp = b.alpha[static_cast<std::size_t>(m)] / a0;
        Interval base = geometric_sum(m, Q, prec);
        Interval corr = chain_correction(m, g, Q, sqrtQ, prec) +
                        twog * Q.pow_ui(static_cast<unsigned long>(m - 1)) * sqrtQ;
        std::ostringstream name;
        name << "alpha'(" << m << "n)";
        out.push_back(row(name.str(), base - corr, amp, base + corr, prec));
    }

    // (Q^g+...+1) - corr <= (Q-1) beta'(0) <= (Q^g+...+1) + corr
    Rational value = (b.Q - Rational(1)) * b.beta0 / a0;
    Interval base = geometric_sum(g, Q, prec);
    Interval corr = chain_correction(g, g, Q, sqrtQ, prec) +
                    twog * Q.pow_ui(static_cast<unsigned long>(g - 1)) * sqrtQ;
    out.push_back(row("(Q-1)beta'(0)", base - corr, value, base + corr, prec));

    return out;
}

InequalityCheck check_beta_product_bounds(const Curve& c, int n, mpfr_prec_t prec) {
    const int g = c.g;
    Interval sq = Interval::of(c.q, prec).sqrt();
    Interval one = Interval::of(1L, prec);
    Interval lo = one, hi = one;
    for (int k = 1; k <= n; ++k) {
        Interval sk = sq.pow_ui(static_cast<unsigned long>(k));
        lo = lo * (sk - one).pow_ui(static_cast<unsigned long>(2 * g - 1)) / (sk + one);
        hi = hi * (sk + one).pow_ui(static_cast<unsigned long>(2 * g - 1)) / (sk - one);
    }
    long e = static_cast<long>(n) * (n - 1) / 2 * (g - 1);
    Rational value = pow_int(c.q, -e) * beta_zagier(c, n, 0);
    return row("beta_bounds(n=" + std::to_string(n) + ")", lo, value, hi, prec);
}

InequalityCheck check_beta_ratio_bounds(const Curve& c, int n, mpfr_prec_t prec) {
    ZetaBundle b = bundle(c, n);
    const int g = c.g;
    Interval sQ = Interval::of(b.Q, prec).sqrt();
    Interval one = Interval::of(1L, prec);
    Interval lo = (sQ - one).pow_ui(static_cast<unsigned long>(2 * g - 1)) / (sQ + one);
    Interval hi = (sQ + one).pow_ui(static_cast<unsigned long>(2 * g - 1)) / (sQ - one);
    Rational value = b.beta0 / b.alpha[0];
    return row("beta'(0)(n=" + std::to_string(n) + ")", lo, value, hi, prec);
}

}  // namespace nzeta
