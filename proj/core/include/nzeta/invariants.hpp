#pragma once

#include "nzeta/highrank.hpp"

namespace nzeta {

/// Total mass of all rank-n degree-0 bundles: q^{C(n,2)(g-1)} * nu_hat(n).
Rational beta_total(const Curve& c, int n);

/// Closed composition-sum formula for the semistable mass beta_n(d):
/// q^{C(n,2)(g-1)} * sum over compositions (n_1..n_k) of n of
///   q^{sum_i (n_i+n_{i+1}) {S_i d/n}} / prod_i (1 - q^{n_i+n_{i+1}}) * prod nu_hat(n_i).
/// The summed exponent must be an integer per composition; otherwise
/// NonIntegralExponent (a transcription bug, never rounded away).
Rational beta_zagier(const Curve& c, int n, long d);

/// alpha_{n}(0) = q^{(n-1)(g-1)} beta_{n-1}(0), checked exactly (n >= 2).
bool counting_miracle_check(const Curve& c, int n);

/// alpha(mn): 0 for m < 0; the closed form beta(0)(q^{mn-n(g-1)} - 1) when
/// mn > 2n(g-1) strictly; otherwise the series coefficient of T^{g-1} zhat.
Rational alpha_large(const Curve& c, int n, long m);

/// beta(mn) = beta(0) for m in {-2,-1,1,2}, and the Zagier value at d = 0
/// equals the residue extraction bundle(c,n).beta0.
bool beta_relation_check(const Curve& c, int n);

}  // namespace nzeta
