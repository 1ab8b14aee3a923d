#include "symbell/polyroots.hpp"

#include <algorithm>
#include <cmath>

namespace symbell {

std::pair<cplx, cplx> poly_eval(const cvec &coeffs, const cplx &z) {
  cplx p = 0, dp = 0;
  for (int i = int(coeffs.size()) - 1; i >= 0; --i) {
    dp = dp * z + p;
    p = p * z + coeffs[size_t(i)];
  }
  return {p, dp};
}

cvec polynomial_roots(const cvec &coeffs, int max_iters, double tol) {
  const int deg = int(coeffs.size()) - 1;
  if (deg <= 0)
    return {};
  if (deg == 1)
    return {-coeffs[0] / coeffs[1]};

  // Monic normalization improves the update formula's conditioning.
  cvec monic(coeffs);
  const cplx lead = monic.back();
  for (auto &c : monic)
    c /= lead;

  // Cauchy-style radius estimate for the initial circle.
  double radius = 0;
  for (int i = 0; i < deg; ++i)
    radius = std::max(radius, std::pow(std::abs(monic[size_t(i)]),
                                       1.0 / double(deg - i)));
  radius = std::max(0.5, 1.2 * radius);

  cvec r(size_t(deg));
  for (int j = 0; j < deg; ++j) {
    // Non-symmetric start angle avoids stalling on symmetric configurations.
    double ang = 2 * 3.141592653589793 * j / deg + 0.45;
    r[size_t(j)] = std::polar(radius * (1.0 + 0.03 * j / deg), ang);
  }

  for (int it = 0; it < max_iters; ++it) {
    double max_step = 0;
    for (int j = 0; j < deg; ++j) {
      cplx denom = 1;
      for (int k = 0; k < deg; ++k)
        if (k != j)
          denom *= (r[size_t(j)] - r[size_t(k)]);
      if (denom == cplx(0)) { // coincident iterates, nudge apart
        r[size_t(j)] += cplx(1e-8, 1e-8);
        continue;
      }
      cplx p = poly_eval(monic, r[size_t(j)]).first;
      cplx step = p / denom;
      r[size_t(j)] -= step;
      max_step = std::max(max_step,
                          std::abs(step) / std::max(1.0, std::abs(r[size_t(j)])));
    }
    if (max_step < tol)
      break;
  }

  // One Newton polish per root, kept only when it reduces |p|.
  for (auto &root : r) {
    auto [p, dp] = poly_eval(monic, root);
    if (std::abs(dp) > 0) {
      cplx cand = root - p / dp;
      if (std::abs(poly_eval(monic, cand).first) < std::abs(p))
        root = cand;
    }
  }
  return r;
}

} // namespace symbell
