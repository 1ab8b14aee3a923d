#include "symbell/measurement.hpp"

#include <cmath>

namespace symbell {

Eigen::Matrix2cd projector(const Basis &b, int outcome) {
  auto k = b.outcome_point(outcome).ket();
  Eigen::Vector2cd v;
  v << k[0], k[1];
  return v * v.adjoint();
}

namespace {

// Contract party `q` of a 2^m amplitude vector with <v| (v given as ket).
cvec contract_party(const cvec &amp, int m, int q,
                    const std::array<cplx, 2> &v) {
  const cplx c0 = std::conj(v[0]), c1 = std::conj(v[1]);
  const size_t half = size_t(1) << (m - 1);
  const size_t low_mask = (size_t(1) << q) - 1;
  cvec out(half);
  for (size_t i = 0; i < half; ++i) {
    size_t base = ((i & ~low_mask) << 1) | (i & low_mask);
    out[i] = c0 * amp[base] + c1 * amp[base | (size_t(1) << q)];
  }
  return out;
}

} // namespace

double term_probability(const SymmetricState &state,
                        const SettingsProfile &settings,
                        const TermAssignment &assignment) {
  const int n = state.n();
  if (settings.n() != n || int(assignment.size()) != n)
    throw std::invalid_argument("party count mismatch");

  cvec amp = state.amplitudes();
  int m = n;
  // Contract assigned parties from the highest index down so that lower
  // party indices stay valid.
  for (int q = n - 1; q >= 0; --q) {
    const auto &a = assignment[size_t(q)];
    if (!a)
      continue;
    const BlochPoint pt =
        settings.basis(q, a->setting).outcome_point(a->outcome);
    amp = contract_party(amp, m, q, pt.ket());
    --m;
  }
  // Unassigned parties are traced out: the probability is the residual norm.
  return norm2(amp);
}

BoxDistribution BoxDistribution::zeros(int n) {
  BoxDistribution box;
  box.n = n;
  box.table.assign(size_t(1) << (2 * n), 0.0);
  return box;
}

BoxDistribution quantum_box(const SymmetricState &state,
                            const SettingsProfile &settings) {
  const int n = state.n();
  if (settings.n() != n)
    throw std::invalid_argument("party count mismatch");
  if (n > 12)
    throw std::length_error("box table would exceed the 4^12 entry cap");

  const cvec base = state.amplitudes();
  const size_t dim = size_t(1) << n;
  auto box = BoxDistribution::zeros(n);

  for (size_t s = 0; s < dim; ++s) {
    // Rotate every party into its measurement eigenbasis, then read off
    // all 2^n outcome probabilities at once.
    cvec amp = base;
    for (int q = 0; q < n; ++q) {
      const Basis &bas = settings.basis(q, int((s >> q) & 1));
      const auto v0 = bas.outcome_point(0).ket();
      const auto v1 = bas.outcome_point(1).ket();
      const cplx u00 = std::conj(v0[0]), u01 = std::conj(v0[1]);
      const cplx u10 = std::conj(v1[0]), u11 = std::conj(v1[1]);
      const size_t step = size_t(1) << q;
      for (size_t i = 0; i < dim; i += 2 * step)
        for (size_t j = i; j < i + step; ++j) {
          const cplx lo = amp[j], hi = amp[j + step];
          amp[j] = u00 * lo + u01 * hi;
          amp[j + step] = u10 * lo + u11 * hi;
        }
    }
    for (size_t o = 0; o < dim; ++o)
      box.at(s, o) = std::norm(amp[o]);
  }
  return box;
}

double normalization_defect(const BoxDistribution &box) {
  const size_t dim = size_t(1) << box.n;
  double worst = 0;
  for (size_t s = 0; s < dim; ++s) {
    double sum = 0;
    for (size_t o = 0; o < dim; ++o)
      sum += box.at(s, o);
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

double nonsignaling_defect(const BoxDistribution &box) {
  const int n = box.n;
  const size_t dim = size_t(1) << n;
  double worst = 0;
  for (int k = 0; k < n; ++k) {
    const size_t kbit = size_t(1) << k;
    for (size_t s = 0; s < dim; ++s) {
      if (s & kbit)
        continue; // pair (s, s | kbit) handled once
      for (size_t orest = 0; orest < dim; ++orest) {
        if (orest & kbit)
          continue;
        double m0 = box.at(s, orest) + box.at(s, orest | kbit);
        double m1 = box.at(s | kbit, orest) + box.at(s | kbit, orest | kbit);
        worst = std::max(worst, std::abs(m0 - m1));
      }
    }
  }
  return worst;
}

BoxDistribution pr_box() {
  auto box = BoxDistribution::zeros(2);
  for (unsigned long s = 0; s < 4; ++s)
    for (unsigned long o = 0; o < 4; ++o) {
      int x = int(s & 1), y = int((s >> 1) & 1);
      int a = int(o & 1), b = int((o >> 1) & 1);
      box.at(s, o) = ((a ^ b) == (x & y)) ? 0.5 : 0.0;
    }
  return box;
}

BoxDistribution shared_random_bit_box() {
  auto box = BoxDistribution::zeros(2);
  for (unsigned long s = 0; s < 4; ++s)
    for (unsigned long o = 0; o < 4; ++o) {
      int a = int(o & 1), b = int((o >> 1) & 1);
      box.at(s, o) = (a == b) ? 0.5 : 0.0;
    }
  return box;
}

BoxDistribution uniform_box(int n) {
  auto box = BoxDistribution::zeros(n);
  const double p = 1.0 / double(size_t(1) << n);
  for (auto &x : box.table)
    x = p;
  return box;
}

BoxDistribution mix(const BoxDistribution &a, const BoxDistribution &b,
                    double weight_a) {
  if (a.n != b.n)
    throw std::invalid_argument("box dimension mismatch");
  BoxDistribution out = a;
  for (size_t i = 0; i < out.table.size(); ++i)
    out.table[i] = weight_a * a.table[i] + (1.0 - weight_a) * b.table[i];
  return out;
}

} // namespace symbell
