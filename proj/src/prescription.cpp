#include "symbell/prescription.hpp"

#include <algorithm>
#include <cmath>

namespace symbell {

namespace {
constexpr double kPi = 3.141592653589793238462643;

bool is_antipodal_pair(const MajoranaSet &ms, double tol) {
  if (ms.entries.size() == 1)
    return true; // product state: a single cluster
  if (ms.entries.size() != 2)
    return false;
  return chordal_distance(antipode(ms.entries[0].point),
                          ms.entries[1].point) <= tol;
}
} // namespace

PrescriptionResult prescribe(const SymmetricState &state, double tol) {
  const int n = state.n();
  if (n < 3)
    throw std::invalid_argument("prescription needs at least three parties");
  MajoranaSet points = majorana_points(state, tol);
  if (is_antipodal_pair(points, 1e-6))
    throw dicke_prescription_error{};

  struct Candidate {
    double value;
    BlochPoint eta, mu;
    int mult;
  };
  std::vector<Candidate> cands;

  for (const auto &e : points.entries) {
    std::optional<SymmetricState> residual;
    try {
      residual = collapse(state, e.point).second;
    } catch (const zero_collapse_error &) {
      continue;
    }
    MajoranaSet res_points = majorana_points(*residual, tol);
    for (const auto &m : res_points.entries) {
      const BlochPoint basis0 = antipode(m.point);
      const double value = std::norm(product_overlap(state, basis0));
      cands.push_back({value, e.point, m.point, e.multiplicity});
    }
  }
  if (cands.empty())
    throw zero_collapse_error{};

  // Highest single-positive-term value; ties resolved by point order.
  auto best = std::min_element(
      cands.begin(), cands.end(), [](const Candidate &a, const Candidate &b) {
        if (a.value != b.value)
          return a.value > b.value;
        if (a.eta.theta != b.eta.theta)
          return a.eta.theta < b.eta.theta;
        if (a.eta.phi != b.eta.phi)
          return a.eta.phi < b.eta.phi;
        if (a.mu.theta != b.mu.theta)
          return a.mu.theta < b.mu.theta;
        return a.mu.phi < b.mu.phi;
      });

  PrescriptionResult out;
  out.chosen_point = best->eta;
  out.chosen_multiplicity = best->mult;
  out.predicted_value = best->value;
  out.settings = SettingsProfile::uniform(n, Basis{antipode(best->mu)},
                                          Basis{best->eta});
  return out;
}

SettingsProfile w_settings(int n) {
  // Outcome 0 of setting 1 sits at |1>; either pole kills the all-ones
  // term, this orientation also keeps the single-flip terms small.
  return SettingsProfile::uniform(n, Basis{BlochPoint::equator(0.0)},
                                  Basis{BlochPoint::south()});
}

double v_w(int n) {
  if (n < 3)
    throw std::invalid_argument("need n >= 3");
  return double(n - 2) / (double(n) * std::pow(2.0, n));
}

SettingsProfile ghz_settings(int n) {
  if (n < 3)
    throw std::invalid_argument("need n >= 3");
  const BlochPoint majorana_pt = BlochPoint::equator(kPi - kPi / n);
  const BlochPoint collapsed_orth =
      BlochPoint::equator(kPi / (double(n) * double(n - 1)));
  return SettingsProfile::uniform(n, Basis{collapsed_orth},
                                  Basis{majorana_pt});
}

double v_g(int n) {
  if (n < 3)
    throw std::invalid_argument("need n >= 3");
  return (1.0 + std::cos((2.0 * n - 1.0) * kPi / (n - 1.0))) /
         std::pow(2.0, n);
}

SettingsProfile dicke_sigma_settings(int n) {
  return SettingsProfile::uniform(n, Basis::sigma_z(), Basis::sigma_x());
}

double v_L(int n, int k) {
  if (k < 1 || k > n - 2)
    throw std::invalid_argument("excitation count out of range");
  return 1.0 - binom(n, k) / std::pow(2.0, n - 1);
}

} // namespace symbell
