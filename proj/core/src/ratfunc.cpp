#include "nzeta/ratfunc.hpp"

#include <algorithm>
#include <sstream>

namespace nzeta {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroDenominator("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly{Rational(1)};
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::exact_div(num_, g);
        den_ = Poly::exact_div(den_, g);
    }
    Rational lead = den_.leading();
    if (!lead.is_one()) {
        Rational inv = Rational(1) / lead;
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw ZeroDenominator("division of rational functions by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc operator*(const Rational& s, const RatFunc& f) {
    return RatFunc(s * f.num_, f.den_);
}

RatFunc RatFunc::scale_substitute(const Rational& c) const {
    return RatFunc(num_.scale_arg(c), den_.scale_arg(c));
}

RatFunc RatFunc::invert_substitute(const Rational& Q) const {
    if (Q.is_zero()) throw DomainViolation("invert_substitute with Q = 0");
    // f(1/(QT)): multiply numerator and denominator by (QT)^m.
    const int m = std::max(num_.degree(), den_.degree());
    auto lift = [&](const Poly& p) {
        std::vector<Rational> out(static_cast<std::size_t>(m) + 1, Rational(0));
        for (int i = 0; i <= p.degree(); ++i)
            out[static_cast<std::size_t>(m - i)] = p.coeff(static_cast<std::size_t>(i)) * Q.pow(-i);
        return Poly(std::move(out));
    };
    return RatFunc(lift(num_), lift(den_));
}

Rational RatFunc::evaluate(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) throw PoleEvaluation("evaluation at a pole: T = " + x.str());
    return num_.eval(x) / d;
}

Rational RatFunc::residue_simple(const Rational& x) const {
    if (!den_.eval(x).is_zero()) return Rational(0);
    // den = (T - x)^k * rest with rest(x) != 0; k >= 1 here.
    Poly lin{-x, Rational(1)};
    Poly rest = Poly::exact_div(den_, lin);
    if (rest.eval(x).is_zero())
        throw HigherOrderPole("pole of order >= 2 at T = " + x.str());
    return num_.eval(x) / rest.eval(x);
}

std::vector<Rational> RatFunc::taylor_coefficients(std::size_t k) const {
    const Rational b0 = den_.coeff(0);
    if (b0.is_zero()) throw PoleAtOrigin("power-series expansion at a pole of T = 0");
    std::vector<Rational> c;
    c.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        Rational acc = num_.coeff(j);
        for (std::size_t i = 1; i <= j; ++i) acc -= den_.coeff(i) * c[j - i];
        c.push_back(acc / b0);
    }
    return c;
}

std::string RatFunc::str(const std::string& var) const {
    std::ostringstream os;
    os << "(" << num_.str(var) << ") / (" << den_.str(var) << ")";
    return os.str();
}

}  // namespace nzeta
