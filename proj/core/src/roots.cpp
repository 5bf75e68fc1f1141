#include "nzeta/roots.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nzeta/errors.hpp"

namespace nzeta {

namespace {

BigComplex horner(const std::vector<BigComplex>& coef, const BigComplex& z) {
    BigComplex acc = coef.back();
    for (std::size_t i = coef.size() - 1; i-- > 0;) acc = acc * z + coef[i];
    return acc;
}

}  // namespace

std::vector<BigComplex> find_roots(const Poly& p, mpfr_prec_t prec, int max_iter) {
    if (p.degree() < 1) throw DomainViolation("find_roots needs degree >= 1");

    std::vector<BigComplex> out;

    // roots at the origin first
    Poly q = p;
    std::size_t k0 = q.order_at_zero();
    for (std::size_t i = 0; i < k0; ++i) out.emplace_back(prec);
    if (k0 > 0) q = q.shift_down(k0);

    const int d = q.degree();
    if (d >= 1) {
        std::vector<BigComplex> coef, dcoef;
        coef.reserve(d + 1);
        for (int i = 0; i <= d; ++i)
            coef.push_back(BigComplex::of(q.coeff(static_cast<std::size_t>(i)), prec));
        Poly dq = q.derivative();
        for (int i = 0; i <= dq.degree(); ++i)
            dcoef.push_back(BigComplex::of(dq.coeff(static_cast<std::size_t>(i)), prec));

        // residual certification bound: 2^{-prec/2} * ||q||_inf
        Rational maxc(0);
        for (int i = 0; i <= d; ++i) {
            Rational a = q.coeff(static_cast<std::size_t>(i)).abs();
            if (a > maxc) maxc = a;
        }
        BigFloat norm = BigFloat::of(maxc, prec);
        BigFloat tau = BigFloat::pow2(-static_cast<long>(prec / 2), prec) * norm;

        // deterministic start: circle of radius (|c0/cd|)^{1/d}, angles offset
        // off the real axis
        double r0 = std::pow(std::abs(q.coeff(0).to_double() / q.leading().to_double()),
                             1.0 / d);
        if (!(r0 > 0) || !std::isfinite(r0)) r0 = 1.0;
        std::vector<BigComplex> z;
        z.reserve(d);
        for (int i = 0; i < d; ++i) {
            double theta = 2.0 * M_PI * i / d + 0.7 / d + 0.41;
            z.push_back(BigComplex::polar(BigFloat::of(r0, prec), BigFloat::of(theta, prec)));
        }

        BigFloat step_tol = BigFloat::pow2(-static_cast<long>(prec) + 6, prec);
        std::vector<bool> locked(d, false);

        for (int iter = 0; iter < max_iter; ++iter) {
            bool all_small = true;
            for (int i = 0; i < d; ++i) {
                if (locked[i]) continue;
                BigComplex pv = horner(coef, z[i]);
                BigFloat bound = tau;
                BigFloat az = z[i].abs();
                if (az > BigFloat::of(1L, prec)) bound = bound * az.pow_si(d);
                if (pv.abs() <= bound) {
                    locked[i] = true;
                    continue;
                }
                BigComplex dv = horner(dcoef, z[i]);
                BigComplex w = dv.is_zero() ? BigComplex::of(Rational(1, 1000000), prec)
                                            : pv / dv;
                BigComplex s(prec);
                for (int j = 0; j < d; ++j) {
                    if (j == i) continue;
                    BigComplex diff = z[i] - z[j];
                    if (diff.is_zero()) {
                        // collided approximations: deterministic nudge
                        z[j] = z[j] + BigComplex(BigFloat::pow2(-16, prec), BigFloat::pow2(-17, prec));
                        diff = z[i] - z[j];
                    }
                    s = s + BigComplex(BigFloat::of(1L, prec), BigFloat(prec)) / diff;
                }
                BigComplex denom = BigComplex(BigFloat::of(1L, prec), BigFloat(prec)) - w * s;
                BigComplex delta = denom.is_zero() ? w : w / denom;
                z[i] = z[i] - delta;
                BigFloat rel = delta.abs();
                if (rel > step_tol * (BigFloat::of(1L, prec) + z[i].abs())) all_small = false;
            }
            if (all_small || std::all_of(locked.begin(), locked.end(), [](bool b) { return b; }))
                break;
        }

        // certify every root
        for (int i = 0; i < d; ++i) {
            BigComplex pv = horner(coef, z[i]);
            BigFloat bound = tau;
            BigFloat az = z[i].abs();
            if (az > BigFloat::of(1L, prec)) bound = bound * az.pow_si(d);
            if (!(pv.abs() <= bound)) {
                std::ostringstream os;
                os << "root finding did not certify at " << prec
                   << " bits; residual " << pv.abs().str(6) << " exceeds " << bound.str(6);
                throw NonConvergence(os.str());
            }
            out.push_back(z[i]);
        }
    }

    std::sort(out.begin(), out.end(), [](const BigComplex& a, const BigComplex& b) {
        int c = a.re.cmp(b.re);
        if (c != 0) return c < 0;
        return a.im.cmp(b.im) < 0;
    });
    return out;
}

}  // namespace nzeta
