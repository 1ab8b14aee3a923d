#include "symbell/bloch.hpp"

#include <cmath>

namespace symbell {

namespace {
constexpr double kPi = 3.141592653589793238462643;
constexpr double kTwoPi = 2.0 * kPi;

double wrap_2pi(double x) {
  x = std::fmod(x, kTwoPi);
  if (x < 0)
    x += kTwoPi;
  if (x >= kTwoPi)
    x = 0.0;
  return x;
}
} // namespace

BlochPoint::BlochPoint(double t, double p) {
  t = std::fmod(t, kTwoPi);
  if (t < 0)
    t += kTwoPi;
  if (t > kPi) { // reflect through the pole
    t = kTwoPi - t;
    p += kPi;
  }
  theta = t;
  phi = (theta == 0.0 || theta == kPi) ? wrap_2pi(p) : wrap_2pi(p);
}

std::array<cplx, 2> BlochPoint::ket() const {
  return {cplx(std::cos(theta / 2), 0.0),
          std::polar(std::sin(theta / 2), phi)};
}

std::array<double, 3> BlochPoint::unit_vector() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

BlochPoint antipode(const BlochPoint &p) {
  return BlochPoint(kPi - p.theta, p.phi + kPi);
}

double chordal_distance(const BlochPoint &a, const BlochPoint &b) {
  auto u = a.unit_vector(), v = b.unit_vector();
  double s = 0;
  for (int i = 0; i < 3; ++i)
    s += (u[i] - v[i]) * (u[i] - v[i]);
  return std::sqrt(s);
}

cplx bra_ket(const BlochPoint &a, const BlochPoint &b) {
  auto ka = a.ket(), kb = b.ket();
  return std::conj(ka[0]) * kb[0] + std::conj(ka[1]) * kb[1];
}

std::optional<cplx> to_plane(const BlochPoint &p, double pole_tol) {
  if (kPi - p.theta < pole_tol)
    return std::nullopt;
  return std::polar(std::tan(p.theta / 2), p.phi);
}

BlochPoint from_plane(const cplx &z) {
  return BlochPoint(2.0 * std::atan(std::abs(z)), std::arg(z));
}

} // namespace symbell
