#pragma once

#include <array>
#include <complex>
#include <optional>

#include "symbell/util.hpp"

namespace symbell {

/// A point on the Bloch sphere, theta in [0, pi], phi in [0, 2*pi).
/// Maps to the qubit state cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
struct BlochPoint {
  double theta = 0.0;
  double phi = 0.0;

  BlochPoint() = default;
  /// Canonicalizes arbitrary real angles into the fundamental domain.
  BlochPoint(double t, double p);

  std::array<cplx, 2> ket() const;
  std::array<double, 3> unit_vector() const; // (x, y, z)

  static BlochPoint north() { return {0.0, 0.0}; }
  static BlochPoint south() { return {3.141592653589793238462643, 0.0}; }
  static BlochPoint equator(double phi) { return {1.5707963267948966, phi}; }
};

BlochPoint antipode(const BlochPoint &p);

/// Chordal (straight-line) distance between the two unit vectors, in [0, 2].
double chordal_distance(const BlochPoint &a, const BlochPoint &b);

/// <a|b> for the corresponding qubit states.
cplx bra_ket(const BlochPoint &a, const BlochPoint &b);

/// Stereographic coordinate z = tan(theta/2) e^{i phi}; the south pole maps
/// to the point at infinity (nullopt).
std::optional<cplx> to_plane(const BlochPoint &p, double pole_tol = 1e-14);
BlochPoint from_plane(const cplx &z);

} // namespace symbell
