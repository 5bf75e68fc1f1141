#pragma once

#include <vector>

#include "nzeta/bigfloat.hpp"
#include "nzeta/poly.hpp"

namespace nzeta {

/// All complex roots of p by Aberth-Ehrlich simultaneous iteration at the
/// requested precision. Each returned root z is certified by the residual
/// bound |p(z)| <= 2^{-precision_bits/2} * max|coeff| * max(1,|z|)^deg;
/// otherwise NonConvergence is thrown with the achieved residuals.
/// Roots are sorted by (Re, Im) for reproducibility.
std::vector<BigComplex> find_roots(const Poly& p, mpfr_prec_t precision_bits,
                                   int max_iter = 500);

}  // namespace nzeta
