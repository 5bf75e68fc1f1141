#include "nzeta/poly.hpp"

#include <sstream>

namespace nzeta {

namespace {
const Rational kZero{0};
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Rational& c) {
    Poly p;
    if (!c.is_zero()) p.c_.push_back(c);
    return p;
}

Poly Poly::monomial(const Rational& coeff, std::size_t deg) {
    Poly p;
    if (coeff.is_zero()) return p;
    p.c_.assign(deg + 1, Rational(0));
    p.c_[deg] = coeff;
    return p;
}

const Rational& Poly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

const Rational& Poly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return Poly(std::move(d));
}

Poly Poly::scale_arg(const Rational& c) const {
    std::vector<Rational> out(c_.size());
    Rational p(1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        out[i] = c_[i] * p;
        p = p * c;
    }
    return Poly(std::move(out));
}

std::size_t Poly::order_at_zero() const {
    std::size_t k = 0;
    while (k < c_.size() && c_[k].is_zero()) ++k;
    return k == c_.size() ? 0 : k;
}

Poly Poly::shift_down(std::size_t k) const {
    if (k == 0) return *this;
    if (c_.size() < k) throw StructureViolation("shift_down: T^k does not divide");
    for (std::size_t i = 0; i < k; ++i)
        if (!c_[i].is_zero()) throw StructureViolation("shift_down: T^k does not divide");
    return Poly(std::vector<Rational>(c_.begin() + static_cast<long>(k), c_.end()));
}

Poly Poly::operator-() const {
    std::vector<Rational> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
    return Poly(std::move(out));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
}

Poly operator*(const Rational& s, const Poly& p) {
    std::vector<Rational> out(p.c_.size());
    for (std::size_t i = 0; i < p.c_.size(); ++i) out[i] = s * p.c_[i];
    return Poly(std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw ZeroDenominator("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rational> rem = a.c_;
    const std::size_t bn = b.c_.size();
    std::vector<Rational> quo(rem.size() - bn + 1, Rational(0));
    const Rational& lead = b.c_.back();
    for (std::size_t k = rem.size(); k >= bn; --k) {
        Rational f = rem[k - 1] / lead;
        if (!f.is_zero()) {
            std::size_t off = k - bn;
            quo[off] = f;
            for (std::size_t i = 0; i < bn; ++i) rem[off + i] -= f * b.c_[i];
        }
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw StructureViolation("exact_div: nonzero remainder");
    return q;
}

Poly Poly::primitive() const {
    if (is_zero()) return *this;
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& c : c_) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
    }
    Rational scale{mpq_class(den_lcm, num_gcd)};
    if (leading().sign() < 0) scale = -scale;
    return scale * (*this);
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return (Rational(1) / leading()) * (*this);
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly x = a.primitive(), y = b.primitive();
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second.primitive();
        x = y;
        y = r;
    }
    return x.monic();
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || !c_[i].is_one()) {
            os << c_[i].str();
            if (i > 0) os << "*";
        }
        if (i == 1) os << var;
        else if (i > 1) os << var << "^" << i;
    }
    return os.str();
}

}  // namespace nzeta
