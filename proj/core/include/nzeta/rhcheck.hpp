#pragma once

#include <string>
#include <vector>

#include "nzeta/highrank.hpp"
#include "nzeta/roots.hpp"

namespace nzeta {

/// Numeric verdict: do all reciprocal roots of a polynomial have a common
/// target modulus?
struct CircleVerdict {
    bool holds = false;
    mpfr_prec_t precision_bits = 128;
    double tolerance = 1e-9;
    BigFloat target;              // required modulus
    BigFloat max_rel_deviation;
    std::vector<BigComplex> roots;   // roots of the polynomial (in T)
    std::vector<BigFloat> moduli;    // per-root |1/T|

    explicit CircleVerdict(mpfr_prec_t prec = 128)
        : precision_bits(prec), target(prec), max_rel_deviation(prec) {}
};

/// Reciprocal-root modulus check with precision doubling (up to max_prec) on
/// NonConvergence. target_recip is the required |1/T| value.
CircleVerdict reciprocal_roots_on_circle(const Poly& p, const BigFloat& target_recip,
                                         double tolerance, mpfr_prec_t prec,
                                         mpfr_prec_t max_prec = 1024);

struct RhVerdict {
    bool holds = false;
    int n = 1;
    Rational Q;
    mpfr_prec_t precision_bits = 128;
    double tolerance = 1e-9;
    BigFloat target;                   // sqrt(Q)
    BigFloat max_rel_deviation;
    std::vector<BigComplex> roots_T;   // numerator roots in T
    std::vector<BigComplex> recip_roots;  // omega = 1/T
    std::vector<BigFloat> moduli;      // |omega|
    std::vector<BigFloat> s_lines;     // Re(s) = -log|T| / (n log q)

    explicit RhVerdict(mpfr_prec_t prec = 128)
        : precision_bits(prec), target(prec), max_rel_deviation(prec) {}
};

/// Riemann hypothesis verdict for a bundle: every reciprocal root of the
/// numerator has modulus sqrt(Q) within the relative tolerance.
RhVerdict rh_verdict(const ZetaBundle& b, long q, double tolerance = 1e-9,
                     mpfr_prec_t prec = 128);

enum class Verdict { Pass, Fail, Indeterminate };
std::string verdict_str(Verdict v);

/// One certified inequality row: lower <= value <= upper evaluated in outward
/// interval arithmetic. Absent bounds are empty strings.
struct InequalityCheck {
    std::string name;
    std::string lower, value, upper;
    Verdict verdict = Verdict::Indeterminate;
};

/// Conditional coefficient bounds for the normalized invariants:
/// the alpha'(n) row (g >= 2), the middle chains 2 <= m <= g-1, and the
/// (Q-1) beta'(0) row. Assumes the rank-n verdict holds (caller checks).
std::vector<InequalityCheck> check_rough_bounds(const Curve& c, int n, mpfr_prec_t prec = 128);

/// prod_{k=1..n} (sqrt(q)^k - 1)^{2g-1}/(sqrt(q)^k + 1)
///   <= q^{-C(n,2)(g-1)} beta_n(0) <= prod (1 + sqrt(q)^k)^{2g-1}/(sqrt(q)^k - 1).
InequalityCheck check_beta_product_bounds(const Curve& c, int n, mpfr_prec_t prec = 128);

/// (sqrt(Q)-1)^{2g-1}/(sqrt(Q)+1) <= beta(0)/alpha(0) <= (sqrt(Q)+1)^{2g-1}/(sqrt(Q)-1).
InequalityCheck check_beta_ratio_bounds(const Curve& c, int n, mpfr_prec_t prec = 128);

}  // namespace nzeta
