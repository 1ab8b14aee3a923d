#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "symbell/symstate.hpp"

namespace symbell {

/// Projective qubit measurement basis. bloch0 is the Bloch direction of the
/// outcome-0 projector; outcome 1 projects onto the antipode. Unit norm
/// holds by construction from the angles.
struct Basis {
  BlochPoint bloch0;

  BlochPoint outcome_point(int outcome) const {
    return outcome == 0 ? bloch0 : antipode(bloch0);
  }
  static Basis sigma_z() { return {BlochPoint::north()}; }
  static Basis sigma_x() { return {BlochPoint::equator(0.0)}; }
};

/// Two dichotomic settings per party.
struct SettingsProfile {
  std::vector<std::array<Basis, 2>> parties;

  int n() const { return int(parties.size()); }
  const Basis &basis(int party, int setting) const {
    return parties[size_t(party)][size_t(setting)];
  }
  /// Every party measures the same two bases.
  static SettingsProfile uniform(int n, const Basis &setting0,
                                 const Basis &setting1) {
    return {std::vector<std::array<Basis, 2>>(size_t(n),
                                              {setting0, setting1})};
  }
};

/// M = (I +- (ax X + ay Y + az Z))/2, + for outcome 0.
Eigen::Matrix2cd projector(const Basis &b, int outcome);

/// Per-party (setting, outcome) requirement of a probability term; parties
/// without an entry are marginalized.
struct SettingOutcome {
  int setting = 0;
  int outcome = 0;
};
using TermAssignment = std::vector<std::optional<SettingOutcome>>;

/// Probability that the assigned parties, measuring their assigned settings,
/// obtain their assigned outcomes; unassigned parties are traced out.
double term_probability(const SymmetricState &state,
                        const SettingsProfile &settings,
                        const TermAssignment &assignment);

/// Full conditional probability table P(outcomes|settings) for n parties
/// with binary settings and outcomes. Index layout: settings and outcomes
/// are little-endian party bit masks; table[s * 2^n + o].
struct BoxDistribution {
  int n = 0;
  std::vector<double> table;

  double at(unsigned long settings, unsigned long outcomes) const {
    return table[(settings << n) | outcomes];
  }
  double &at(unsigned long settings, unsigned long outcomes) {
    return table[(settings << n) | outcomes];
  }
  static BoxDistribution zeros(int n);
};

/// Materializes the full table (n <= 12).
BoxDistribution quantum_box(const SymmetricState &state,
                            const SettingsProfile &settings);

/// Max normalization defect over setting tuples.
double normalization_defect(const BoxDistribution &box);

/// Max marginal mismatch over parties and setting flips: how far the box is
/// from satisfying the nonsignaling conditions.
double nonsignaling_defect(const BoxDistribution &box);

// Stock boxes used by the monogamy audits and tests.
BoxDistribution pr_box();                 // a + b = x y (mod 2), uniform
BoxDistribution shared_random_bit_box();  // P(ab|xy) = [a=b]/2
BoxDistribution uniform_box(int n);
BoxDistribution mix(const BoxDistribution &a, const BoxDistribution &b,
                    double weight_a);

} // namespace symbell
