#pragma once

#include "symbell/bell.hpp"
#include "symbell/majorana.hpp"

namespace symbell {

/// Measurement bases derived from the Majorana points. Setting 1 puts its
/// outcome-0 projector on a Majorana point (so the all-ones term vanishes);
/// setting 0 puts its outcome-0 projector orthogonal to a Majorana point of
/// the one-party-collapsed state (so every single-flip term vanishes).
struct PrescriptionResult {
  SettingsProfile settings;
  BlochPoint chosen_point;     // the Majorana point used for setting 1
  int chosen_multiplicity = 1; // its degeneracy
  double predicted_value = 0;  // = P(0..0|0..0) under these settings
};

/// Throws dicke_prescription_error when all Majorana points sit on two
/// antipodal clusters (rotated Dicke states), where no choice works.
PrescriptionResult prescribe(const SymmetricState &state, double tol = 1e-6);

/// W-family reference bases: {|+>,|->} as setting 0 and {|1>,|0>} as
/// setting 1 (outcome 0 listed first).
SettingsProfile w_settings(int n);
/// Quoted closed-form value (n-2)/(n 2^n) for the W family at w_settings.
double v_w(int n);

/// GHZ-family bases from the prescription: setting 1 on the equatorial
/// Majorana point at phi = pi - pi/n, setting 0 on the equator at
/// phi = pi/(n(n-1)), orthogonal to a Majorana point of the collapsed state.
SettingsProfile ghz_settings(int n);
/// (1 + cos((2n-1) pi/(n-1)))/2^n, attained exactly at ghz_settings.
double v_g(int n);

/// sigma_z as setting 0, sigma_x as setting 1 (outcome 0 -> |+>).
SettingsProfile dicke_sigma_settings(int n);
/// 1 - C(n,k)/2^{n-1}, the Dicke-state value of L(n,k) at the sigma bases.
double v_L(int n, int k);

} // namespace symbell
