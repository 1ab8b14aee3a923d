#pragma once

#include <vector>

#include "symbell/symstate.hpp"

namespace symbell {

/// Multiset of Bloch-sphere points representing a symmetric state, one point
/// per qubit factor. Entries closer than the clustering tolerance are merged
/// with summed multiplicity.
struct MajoranaSet {
  struct Entry {
    BlochPoint point;
    int multiplicity = 1;
  };
  std::vector<Entry> entries;

  int total() const {
    int s = 0;
    for (const auto &e : entries)
      s += e.multiplicity;
    return s;
  }
};

/// The n roots (with multiplicity) of the characteristic polynomial
///   p(z) = sum_k (-1)^k sqrt(C(n,k)) a_k z^{n-k}
/// under the stereographic map z = tan(theta/2) e^{i phi}. Degree deficiency
/// (vanishing leading coefficients) contributes exact south-pole points.
/// Roots within tol (chordal) are merged; a coarser merge is accepted only
/// when rebuilding the state from the merged set reproduces the input.
MajoranaSet majorana_points(const SymmetricState &state, double tol = 1e-6);

/// Normalized symmetrization of the product of the point states; inverse of
/// majorana_points up to global phase. The first significant Dicke
/// coefficient is made real positive.
SymmetricState state_from_majorana(const MajoranaSet &points);

/// Multiplicities in descending order, e.g. [3,1] for the W state of four
/// qubits.
std::vector<int> degeneracy_profile(const MajoranaSet &points);

/// z -> (a z + b)/(c z + d) on the extended plane; multiplicities are
/// preserved. Throws when a d - b c is (numerically) zero.
MajoranaSet mobius(const MajoranaSet &points, cplx a, cplx b, cplx c, cplx d);

} // namespace symbell
