#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace symbell {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

/// Exact binomial coefficient as a double (integral up to n ~ 50).
inline double binom(int n, int k) {
  if (k < 0 || k > n)
    return 0.0;
  if (k > n - k)
    k = n - k;
  double r = 1.0;
  for (int i = 1; i <= k; ++i)
    r = r * double(n - k + i) / double(i);
  return std::round(r);
}

/// Number of set bits.
inline int popcount_n(unsigned long x) { return __builtin_popcountl(x); }

inline double norm2(const cvec &v) {
  double s = 0;
  for (const auto &c : v)
    s += std::norm(c);
  return s;
}

/// Multiply v by the phase making its first significant entry real positive.
/// Entries below rel_tol * ||v|| are not considered significant.
inline void fix_global_phase(cvec &v, double rel_tol = 1e-9) {
  const double scale = std::sqrt(norm2(v));
  for (const auto &c : v) {
    if (std::abs(c) > rel_tol * scale) {
      const cplx ph = std::conj(c) / std::abs(c);
      for (auto &x : v)
        x *= ph;
      return;
    }
  }
}

/// |<a|b>|^2 for unit coefficient vectors.
inline double fidelity(const cvec &a, const cvec &b) {
  cplx ip = 0;
  for (size_t i = 0; i < a.size(); ++i)
    ip += std::conj(a[i]) * b[i];
  return std::norm(ip);
}

// Projecting one party of a symmetric state can give the zero vector when
// the direction is orthogonal to every term; this error marks that case so
// callers can retry with a different point.
struct zero_collapse_error : std::runtime_error {
  zero_collapse_error() : std::runtime_error("projection amplitude is zero") {}
};

struct dicke_prescription_error : std::runtime_error {
  dicke_prescription_error()
      : std::runtime_error("measurement prescription does not apply to Dicke "
                           "states (all Majorana points on two antipodal "
                           "clusters)") {}
};

struct signaling_box_error : std::runtime_error {
  explicit signaling_box_error(double dev)
      : std::runtime_error("box violates the nonsignaling conditions"),
        deviation(dev) {}
  double deviation;
};

} // namespace symbell
