#pragma once

#include <mpfr.h>

#include <string>
#include <vector>

#include "nzeta/ratfunc.hpp"

namespace nzeta {

/// Arithmetic input for everything: base field size q, genus g, and the Weil
/// numerator P(t) = 1 + c_1 t + ... + c_{2g} t^{2g}.
struct Curve {
    std::string name;
    long q = 2;
    int g = 1;
    std::vector<Rational> p_coeffs;  // degree exactly 2g, p_coeffs[0] = 1
};

/// Completed-zeta special values: zeta_at[k] for 1 <= k <= n_max where
/// zeta_at[1] is the residue at t = 1, and the cumulative products
/// nu_hat[k] = zeta_at[1] * ... * zeta_at[k] (nu_hat[0] = 1).
struct SpecialValues {
    std::vector<Rational> zeta_at;
    std::vector<Rational> nu_hat;
};

struct ValidationOptions {
    bool reject_non_prime_power_q = false;
    double weil_rel_tol = 1e-9;
    mpfr_prec_t precision = 256;
};

bool is_prime_power(long q);

/// Checks the exact invariants (constant term 1, degree 2g, functional
/// equation symmetry c_{2g-i} = q^{g-i} c_i) and the numeric Weil condition
/// |omega_i| = sqrt(q). Throws WeilViolation / DomainViolation.
void validate_curve(const Curve& c, const ValidationOptions& opts = {});

/// Reconstructs P(t) from the point counts N_1..N_g over F_{q^i} via power
/// sums and Newton's identities, then the functional-equation reflection.
Curve curve_from_point_counts(const std::string& name, long q, int g,
                              const std::vector<long>& counts,
                              const ValidationOptions& opts = {});

/// Ingests explicit numerator coefficients (validated).
Curve curve_from_coefficients(const std::string& name, long q, int g,
                              std::vector<Rational> coeffs,
                              const ValidationOptions& opts = {});

/// P(t) = prod_i (1 - a_i t + q t^2); Weil-valid by construction. Requires
/// a_i^2 <= 4q (TraceOutOfRange otherwise).
Curve synth_curve(const std::string& name, long q, int g, const std::vector<long>& traces);

/// Recovers N_1..N_upto from the numerator coefficients by Newton's
/// identities (the round-trip inverse of curve_from_point_counts).
std::vector<mpz_class> point_counts_from_curve(const Curve& c, int upto);

/// Completed Artin zeta P(t) / (t^{g-1} (1-t) (1-qt)).
RatFunc artin_zeta(const Curve& c);

SpecialValues special_values(const Curve& c, int n_max);

}  // namespace nzeta
