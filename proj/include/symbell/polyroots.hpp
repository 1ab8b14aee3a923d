#pragma once

#include "symbell/util.hpp"

namespace symbell {

/// Roots of sum_i coeffs[i] z^i (ascending powers), found by Durand-Kerner
/// simultaneous iteration followed by one Newton polish per root.
///
/// The caller is expected to have stripped exact leading/trailing zeros;
/// coeffs.front() and coeffs.back() must be nonzero. Returns degree() roots.
cvec polynomial_roots(const cvec &coeffs, int max_iters = 500,
                      double tol = 1e-13);

/// Evaluate p and its derivative at z (Horner).
std::pair<cplx, cplx> poly_eval(const cvec &coeffs, const cplx &z);

} // namespace symbell
