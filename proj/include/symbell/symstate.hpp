#pragma once

#include <string>

#include "symbell/bloch.hpp"
#include "symbell/util.hpp"

namespace symbell {

/// Permutation-symmetric n-qubit pure state, stored as the n+1 amplitudes
/// over the Dicke basis |S(n,k)>, k = 0..n. Unit norm enforced on
/// construction.
class SymmetricState {
public:
  SymmetricState(int n, cvec coeffs);

  int n() const { return n_; }
  const cvec &coeffs() const { return coeffs_; }
  const cplx &coeff(int k) const { return coeffs_[size_t(k)]; }

  /// Full 2^n computational-basis amplitude vector,
  /// amp[bits] = a_popcount(bits) / sqrt(C(n, popcount)).
  cvec amplitudes() const;

private:
  int n_;
  cvec coeffs_;
};

// Named constructors.
SymmetricState dicke_state(int n, int k);
SymmetricState w_state(int n);
SymmetricState ghz_state(int n);
SymmetricState tetrahedron_state();
SymmetricState zzz_plus_state();
/// Normalized symmetrization of |000> (cos(t/2)|0> + sin(t/2)|1>).
SymmetricState zzz_theta_state(double theta);
SymmetricState raw_state(cvec coeffs); // normalizes; throws if ~zero

/// Parse a state descriptor: "w:4", "ghz:5", "dicke:6,2", "tetra",
/// "zzz_plus", "zzz_theta:1.57", "raw:c0,c1,..." (complex as re+imi).
SymmetricState parse_state(const std::string &spec);

/// Project one party (any; the state is symmetric) onto <p| and renormalize.
/// Returns the projection norm and the (n-1)-party residual, whose first
/// significant Dicke coefficient is made real positive.
/// Throws zero_collapse_error when the projection vanishes.
std::pair<double, SymmetricState> collapse(const SymmetricState &state,
                                           const BlochPoint &p);

/// <p|^{(x)n} |state> via the Dicke expansion.
cplx product_overlap(const SymmetricState &state, const BlochPoint &p);

double fidelity(const SymmetricState &a, const SymmetricState &b);

} // namespace symbell
