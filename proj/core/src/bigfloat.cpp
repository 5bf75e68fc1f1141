#include "nzeta/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace nzeta {

namespace {
mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
    return std::max(a.prec(), b.prec());
}
}  // namespace

BigFloat BigFloat::of(long x, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::of(double x, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::of(const Rational& x, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_q(r.v_, x.raw().get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(prec());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt() const {
    BigFloat r(prec());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::log() const {
    BigFloat r(prec());
    mpfr_log(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::exp() const {
    BigFloat r(prec());
    mpfr_exp(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sin() const {
    BigFloat r(prec());
    mpfr_sin(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::cos() const {
    BigFloat r(prec());
    mpfr_cos(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow_si(long e) const {
    BigFloat r(prec());
    mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::hypot(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow2(long e, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
}

std::string BigFloat::str(int digits) const {
    char buf[512];
    mpfr_snprintf(buf, sizeof buf, "%.*Re", digits, v_);
    return buf;
}

BigComplex BigComplex::polar(const BigFloat& r, const BigFloat& theta) {
    return BigComplex(r * theta.cos(), r * theta.sin());
}

BigComplex pow_complex(const BigFloat& base, const BigComplex& z) {
    BigFloat lnb = base.log();
    BigFloat mag = (z.re * lnb).exp();
    BigFloat ang = z.im * lnb;
    return BigComplex::polar(mag, ang);
}

// ---------------------------------------------------------------------------
// Interval

Interval Interval::of(const Rational& x, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, x.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, x.raw().get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::of(long x, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_, x, MPFR_RNDD);
    mpfr_set_si(r.hi_, x, MPFR_RNDU);
    return r;
}

Interval Interval::of(const mpz_class& x, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_z(r.lo_, x.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, x.get_mpz_t(), MPFR_RNDU);
    return r;
}

Interval operator+(const Interval& a, const Interval& b) {
    Interval r(std::max(a.prec(), b.prec()));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval r(std::max(a.prec(), b.prec()));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b) {
    Interval r(std::max(a.prec(), b.prec()));
    mpfr_t t;
    mpfr_init2(t, r.prec());
    // lo: min of the four products rounded down
    mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    const mpfr_srcptr xs[2] = {a.lo_, a.hi_};
    const mpfr_srcptr ys[2] = {b.lo_, b.hi_};
    for (auto x : xs)
        for (auto y : ys) {
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
        }
    // hi: max of the four products rounded up
    mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
    for (auto x : xs)
        for (auto y : ys) {
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
        }
    mpfr_clear(t);
    return r;
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw DomainViolation("interval division by an interval containing 0");
    Interval r(std::max(a.prec(), b.prec()));
    mpfr_t t;
    mpfr_init2(t, r.prec());
    const mpfr_srcptr xs[2] = {a.lo_, a.hi_};
    const mpfr_srcptr ys[2] = {b.lo_, b.hi_};
    bool first = true;
    for (auto x : xs)
        for (auto y : ys) {
            mpfr_div(t, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
            first = false;
        }
    first = true;
    for (auto x : xs)
        for (auto y : ys) {
            mpfr_div(t, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

Interval Interval::operator-() const {
    Interval r(prec());
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval Interval::sqrt() const {
    if (mpfr_sgn(lo_) < 0) throw DomainViolation("interval sqrt of a negative interval");
    Interval r(prec());
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::pow_ui(unsigned long e) const {
    Interval r = Interval::of(1L, prec());
    Interval base = *this;
    // exponents here are tiny; repeated multiplication keeps rounding outward
    for (unsigned long i = 0; i < e; ++i) r = r * base;
    return r;
}

BigFloat Interval::lower() const {
    BigFloat b(prec());
    mpfr_set(b.raw(), lo_, MPFR_RNDD);
    return b;
}

BigFloat Interval::upper() const {
    BigFloat b(prec());
    mpfr_set(b.raw(), hi_, MPFR_RNDU);
    return b;
}

std::string Interval::str(int digits) const {
    char buf[1024];
    mpfr_snprintf(buf, sizeof buf, "[%.*Re, %.*Re]", digits, lo_, digits, hi_);
    return buf;
}

Cmp3 leq(const Interval& a, const Interval& b) {
    if (a.certainly_le(b)) return Cmp3::True;
    if (a.certainly_gt(b)) return Cmp3::False;
    return Cmp3::Indeterminate;
}

}  // namespace nzeta
