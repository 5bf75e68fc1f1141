#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "nzeta/rational.hpp"

namespace nzeta {

/// Arbitrary-precision binary float (MPFR value semantics). Binary ops round
/// to nearest at the larger operand precision.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = 128) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(BigFloat o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat of(long x, mpfr_prec_t prec);
    static BigFloat of(double x, mpfr_prec_t prec);
    static BigFloat of(const Rational& x, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
    bool operator>(const BigFloat& o) const { return cmp(o) > 0; }
    bool operator<=(const BigFloat& o) const { return cmp(o) <= 0; }
    bool operator==(const BigFloat& o) const { return cmp(o) == 0; }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;

    BigFloat abs() const;
    BigFloat sqrt() const;
    BigFloat log() const;
    BigFloat exp() const;
    BigFloat sin() const;
    BigFloat cos() const;
    BigFloat pow_si(long e) const;
    static BigFloat hypot(const BigFloat& a, const BigFloat& b);
    /// 2^e at this precision.
    static BigFloat pow2(long e, mpfr_prec_t prec);

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Deterministic decimal rendering, round-to-nearest, scientific form.
    std::string str(int digits = 40) const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

  private:
    mpfr_t v_;
};

/// Complex number over BigFloat.
struct BigComplex {
    BigFloat re, im;

    explicit BigComplex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    static BigComplex of(const Rational& x, mpfr_prec_t prec) {
        return BigComplex(BigFloat::of(x, prec), BigFloat(prec));
    }
    static BigComplex polar(const BigFloat& r, const BigFloat& theta);

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    BigFloat abs() const { return BigFloat::hypot(re, im); }
    BigComplex conj() const { return {re, -im}; }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    BigComplex operator-() const { return {-re, -im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
};

/// base^z for real base > 0.
BigComplex pow_complex(const BigFloat& base, const BigComplex& z);

/// Closed interval with outward-rounded endpoints; the building block for
/// certified inequality verdicts against irrational thresholds.
class Interval {
  public:
    explicit Interval(mpfr_prec_t prec = 128) {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    Interval(const Interval& o) {
        mpfr_init2(lo_, mpfr_get_prec(o.lo_));
        mpfr_init2(hi_, mpfr_get_prec(o.hi_));
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    Interval(Interval&& o) noexcept {
        mpfr_init2(lo_, mpfr_get_prec(o.lo_));
        mpfr_init2(hi_, mpfr_get_prec(o.hi_));
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }
    Interval& operator=(Interval o) noexcept {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        return *this;
    }
    ~Interval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    static Interval of(const Rational& x, mpfr_prec_t prec);
    static Interval of(long x, mpfr_prec_t prec);
    static Interval of(const mpz_class& x, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    /// Requires 0 outside b.
    friend Interval operator/(const Interval& a, const Interval& b);
    Interval operator-() const;
    Interval sqrt() const;  // requires lo >= 0
    Interval pow_ui(unsigned long e) const;

    bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

    /// Certainly a <= b: every point of a is <= every point of b.
    bool certainly_le(const Interval& o) const { return mpfr_cmp(hi_, o.lo_) <= 0; }
    /// Certainly a > b.
    bool certainly_gt(const Interval& o) const { return mpfr_cmp(lo_, o.hi_) > 0; }

    BigFloat lower() const;
    BigFloat upper() const;
    std::string str(int digits = 20) const;

  private:
    mpfr_t lo_, hi_;
};

/// Tri-state verdict of an interval comparison "a <= b".
enum class Cmp3 { True, False, Indeterminate };
Cmp3 leq(const Interval& a, const Interval& b);

}  // namespace nzeta
