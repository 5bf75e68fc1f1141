#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "nzeta/rational.hpp"

namespace nzeta {

/// Dense univariate polynomial over Rational. coeff(i) is the coefficient of
/// T^i; trailing zeros are stripped, so the zero polynomial is the empty one.
class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& coeff, std::size_t deg);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of T^i (zero beyond the degree).
    const Rational& coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const;

    Rational eval(const Rational& x) const;

    Poly derivative() const;

    /// p(c*T)
    Poly scale_arg(const Rational& c) const;

    /// Largest k with T^k | p (0 for p(0) != 0; 0 for the zero polynomial).
    std::size_t order_at_zero() const;
    /// p / T^k (requires T^k | p).
    Poly shift_down(std::size_t k) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& p);

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Long division: a = q*b + r with deg r < deg b. Throws ZeroDenominator
    /// for b = 0.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    /// Exact division; throws StructureViolation if the remainder is nonzero.
    static Poly exact_div(const Poly& a, const Poly& b);

    /// Monic gcd over Q, Euclidean with content stripping at each step.
    static Poly gcd(const Poly& a, const Poly& b);

    /// Scales so the coefficients are coprime integers with positive leading
    /// coefficient (content stripped); zero stays zero.
    Poly primitive() const;
    /// Scales so the leading coefficient is 1; zero stays zero.
    Poly monic() const;

    std::string str(const std::string& var = "T") const;

  private:
    void trim();
    std::vector<Rational> c_;
};

}  // namespace nzeta
