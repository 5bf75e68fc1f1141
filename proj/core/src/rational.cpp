#include "nzeta/rational.hpp"

#include <ostream>

namespace nzeta {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw ZeroDenominator("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw ParseError("cannot parse rational: '" + s + "'");
    if (v.get_den() == 0) throw ZeroDenominator("rational with zero denominator: '" + s + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::str() const { return v_.get_str(); }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ZeroDenominator("division of rationals by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw ZeroDenominator("0 raised to a negative power");
        return Rational(0);
    }
    mpz_class num, den;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), k);
    mpq_class r(num, den);
    if (e < 0) r = 1 / r;
    r.canonicalize();
    return Rational(std::move(r));
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Rational Rational::fract() const {
    return *this - Rational(floor());
}

Rational pow_int(long base, long e) { return Rational(base).pow(e); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace nzeta
