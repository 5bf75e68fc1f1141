#pragma once

#include <complex>
#include <cstdint>
#include <utility>

#include "nzeta/rhcheck.hpp"

namespace nzeta {

/// The rank-3 zeta split into its three closed-formula terms (in T = q^{-3s})
/// and the half-weighted upper/lower halves. All identities are verified
/// exactly at construction.
struct Rank3Parts {
    RatFunc z1, z2, z3;
    RatFunc z_ge2;  // z2/2 + z3
    RatFunc z_le2;  // z1 + z2/2
};

/// The two-term rank-2 formula Zhat(T)/(1 - q^2 T) - Zhat(qT) T/(1 - T);
/// equals sl_n_zeta(c, 2) up to the constant q^{g-1} nu_hat(1).
RatFunc sl2_zeta_formula(const Curve& c);

enum class Ordering { LT, EQ, GT };

/// Sign of |w - a q^k||w - b q^k| - |1 - a q^k w||1 - b q^k w| for a
/// conjugate-type pair: ab = q, a+b real, |a+b| <= q+1, kappa >= 0.
/// GT when |w| < 1, LT when |w| > 1, EQ only possible on |w| = 1.
Ordering yoshida_compare(std::complex<double> alpha, std::complex<double> beta,
                         double q, double kappa, std::complex<double> w);

/// q^{2x+1} + 1 - q^x (q+1); nonnegative for q > 1, x >= 0, zero only at x=0.
double yoshida_gap(double q, double x);

struct YoshidaScan {
    long long samples = 0;
    long long violations = 0;
    long long unexpected_eq = 0;  // EQ with | |w|-1 | > 1e-6
};

/// Random admissible samples on both sides of |w| = 1.
YoshidaScan yoshida_scan(double q, long long per_side, std::uint64_t seed);

Rank3Parts rank3_parts(const Curve& c);

/// Verdict on the zeros of z_ge2: holds iff every numerator root has
/// |T| = q^{-1} within the relative tolerance (zeros on Re(s) = 1/3).
CircleVerdict rh_third_line(const Rank3Parts& parts, const Curve& c,
                            double tolerance = 1e-9, mpfr_prec_t prec = 128);

struct PredicateReport {
    long long samples = 0;
    long long violations = 0;
    long long boundary = 0;            // checks on the symmetry boundary
    long long boundary_violations = 0;
    long long identity = 0;            // degenerate exact-identity cases
    long long skipped_at_pole = 0;
    bool pass() const { return violations == 0 && boundary_violations == 0; }
};

/// Sampled verification of the reflected-argument zeta ratio: with b = n+1-a,
/// kappa = n/2-a and w = q^{n sigma},
///   |zeta(ns-n+a) / zeta(1-ns+n-b)|  vs  M = |(1-q^k w)(1-q^{k+1} w)| /
///                                          (|w-q^k||w-q^{k+1}|)
/// is > M iff |w| < 1 when a < b, reversed when a > b, and == M when a = b.
/// Boundary samples (purely imaginary sigma) check |ratio| = 1.
PredicateReport check_reflected_zeta_ratio(const Curve& c, int n, int a,
                                           long long samples_per_side, std::uint64_t seed,
                                           mpfr_prec_t prec = 128);

/// Sampled verification of the adjacent-argument ratio (b = a+1):
///   |zeta(n sigma - n/2 + a) / zeta(n sigma - n/2 + a + 1)|
///     vs |(q - t)/(1 - q t)| with t = q^{-n sigma + n/2 - a},
/// > iff |q^{n sigma}| < q^{n/2 - a}, < on the other side.
PredicateReport check_adjacent_zeta_ratio(const Curve& c, int n, int a,
                                          long long samples_per_side, std::uint64_t seed,
                                          mpfr_prec_t prec = 128);

/// Exact-rational disc-containment report behind the one-third-line argument:
/// ratio = nu_hat(2)/nu_hat(1)^2 against q/(q^2-1) and 3/(2(q-1)), and the
/// disc with the stated center/radius against the unit disc.
struct UnitDiscReport {
    Rational ratio;        // nu2 / nu1^2
    Rational threshold_a;  // q/(q^2-1)
    Rational threshold_b;  // 3/(2(q-1))
    bool ratio_gt_a = false;
    bool ratio_gt_b = false;
    bool radius_defined = false;  // q*ratio + q^2/(1-q^2) > 0
    Rational center;
    Rational radius;
    bool contained = false;  // disc inside |w| < 1
};

UnitDiscReport check_unit_disc_containment(const Curve& c);

/// The composition tail-factor functions f_{n,a}, g_{n,a} as exact rational
/// functions of u = q^{n sigma + n/2} (all exponents integral in u).
std::pair<RatFunc, RatFunc> ratio_factor_functions(const Curve& c, int n, int a);

}  // namespace nzeta
