#pragma once

#include "nzeta/compositions.hpp"
#include "nzeta/curve.hpp"

namespace nzeta {

/// A rank-n zeta together with its extracted structure: numerator polynomial
/// (degree 2g), alpha invariants alpha(mn) for m = 0..g-1, and beta(0).
struct ZetaBundle {
    int n = 1;
    Rational Q;          // q^n
    RatFunc zhat;        // full rank-n zeta in T, constant q^{C(n,2)(g-1)} included
    Poly numerator;      // zhat * T^{g-1}(1-T)(1-QT), a degree-2g polynomial
    std::vector<Rational> alpha;  // alpha(0), alpha(n), ..., alpha((g-1)n)
    Rational beta0;      // residue at T = 1
};

/// prod nu_hat(parts) / prod_j (1 - q^{parts_j + parts_{j+1}}); 1 for the
/// empty composition.
Rational composition_weight(const Composition& comp, const SpecialValues& sv, long q);

/// One a-term of the composition-sum closed formula (prefactor excluded):
/// [k-composition sum over n-a] * Zhat(q^{n-a} T) * [l-composition sum over a-1]
/// with boundary factors T/(T - q^{a+k_p-n}) and 1/(1 - q^{n-a+1+l_1} T);
/// empty compositions contribute 1 and omit their boundary factor.
RatFunc uniformity_term(const Curve& c, int n, int a);

/// The rank-n zeta: q^{C(n,2)(g-1)} * sum of the a-terms, canonical.
RatFunc sl_n_zeta(const Curve& c, int n);

/// True iff the canonical denominator of z divides T^{g-1}(1-T)(1-QT) with
/// Q = q^n, i.e. every intermediate factor (qT-1)...(q^{n-1}T-1) cancelled.
bool verify_cancellation(const RatFunc& z, int n, long q, int g);

/// Builds the bundle and checks its structural invariants (degree 2g,
/// coefficient symmetry, constant/leading terms). StructureViolation if the
/// assembled function does not have the mandated shape.
ZetaBundle bundle(const Curve& c, int n);

/// Reassembles the zeta from the invariants:
///   sum_{m=0}^{g-2} alpha(mn) (T^{m-(g-1)} + Q^{(g-1)-m} T^{(g-1)-m})
///   + alpha(n(g-1)) + (Q-1) beta(0) T / ((1-T)(1-QT)).
/// alpha has g entries; for g = 1 only the middle term and the tail remain.
RatFunc zeta_from_invariants(const std::vector<Rational>& alpha, const Rational& beta0,
                             int n, int g, long q);

}  // namespace nzeta
