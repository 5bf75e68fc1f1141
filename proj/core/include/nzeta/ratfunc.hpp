#pragma once

#include <string>
#include <vector>

#include "nzeta/poly.hpp"

namespace nzeta {

/// Rational function in one variable over Rational, kept canonical:
/// gcd(num, den) = 1 and den monic, so operator== is mathematical equality.
class RatFunc {
  public:
    RatFunc() : num_(), den_{Rational(1)} {}
    /// Normalizes; throws ZeroDenominator if den = 0.
    RatFunc(Poly num, Poly den);

    static RatFunc from_poly(Poly p) { return RatFunc(std::move(p), Poly{Rational(1)}); }
    static RatFunc constant(const Rational& c) { return from_poly(Poly::constant(c)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const Rational& s, const RatFunc& f);
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// f(c*T) in canonical form.
    RatFunc scale_substitute(const Rational& c) const;
    /// f(1/(Q*T)) in canonical form; Q != 0.
    RatFunc invert_substitute(const Rational& Q) const;
    /// Exact value; throws PoleEvaluation when den(x) = 0.
    Rational evaluate(const Rational& x) const;
    /// lim_{T->x} (T-x) f(T); 0 when x is not a pole; throws HigherOrderPole
    /// when (T-x)^2 divides the canonical denominator.
    Rational residue_simple(const Rational& x) const;
    /// First k power-series coefficients at T = 0; throws PoleAtOrigin.
    std::vector<Rational> taylor_coefficients(std::size_t k) const;

    std::string str(const std::string& var = "T") const;

  private:
    Poly num_, den_;
};

/// Canonical representative of num/den (same as the RatFunc constructor).
inline RatFunc normalize(Poly num, Poly den) { return RatFunc(std::move(num), std::move(den)); }

}  // namespace nzeta
