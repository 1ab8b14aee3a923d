#include "symbell/majorana.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>

#include "symbell/polyroots.hpp"

namespace symbell {

namespace {

// Characteristic polynomial coefficients, ascending in z:
// p(z) = sum_k (-1)^k sqrt(C(n,k)) a_k z^{n-k}.
cvec char_poly(const SymmetricState &state) {
  const int n = state.n();
  cvec c(size_t(n) + 1);
  double sign = 1.0;
  for (int k = 0; k <= n; ++k) {
    c[size_t(n - k)] = sign * std::sqrt(binom(n, k)) * state.coeff(k);
    sign = -sign;
  }
  return c;
}

struct WeightedPoint {
  std::array<double, 3> v; // unit vector
  int mult;
};

BlochPoint to_bloch(const std::array<double, 3> &v) {
  double r = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  double theta = std::acos(std::clamp(v[2] / r, -1.0, 1.0));
  double phi = std::atan2(v[1], v[0]);
  return BlochPoint(theta, phi);
}

// Single-linkage clustering at the given chordal threshold; cluster centers
// are multiplicity-weighted means projected back to the sphere.
std::vector<MajoranaSet::Entry>
cluster_points(const std::vector<WeightedPoint> &pts, double thresh) {
  const size_t m = pts.size();
  std::vector<size_t> parent(m);
  std::iota(parent.begin(), parent.end(), size_t(0));
  std::function<size_t(size_t)> find = [&](size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      double d2 = 0;
      for (int t = 0; t < 3; ++t)
        d2 += (pts[i].v[t] - pts[j].v[t]) * (pts[i].v[t] - pts[j].v[t]);
      if (d2 <= thresh * thresh)
        parent[find(i)] = find(j);
    }
  std::vector<MajoranaSet::Entry> out;
  std::vector<bool> done(m, false);
  for (size_t i = 0; i < m; ++i) {
    size_t r = find(i);
    if (done[r])
      continue;
    done[r] = true;
    std::array<double, 3> mean{0, 0, 0};
    int mult = 0;
    for (size_t j = 0; j < m; ++j)
      if (find(j) == r) {
        for (int t = 0; t < 3; ++t)
          mean[t] += pts[j].mult * pts[j].v[t];
        mult += pts[j].mult;
      }
    out.push_back({to_bloch(mean), mult});
  }
  // Deterministic ordering: by (theta, phi).
  std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    if (a.point.theta != b.point.theta)
      return a.point.theta < b.point.theta;
    return a.point.phi < b.point.phi;
  });
  return out;
}

// Phase-aligned coefficient distance. Computed by direct subtraction:
// 1 - fidelity underflows long before differences of 1e-9 do.
double reconstruction_error(const MajoranaSet &cand,
                            const SymmetricState &state) {
  SymmetricState rec = state_from_majorana(cand);
  cplx ip = 0;
  for (size_t i = 0; i < rec.coeffs().size(); ++i)
    ip += std::conj(rec.coeffs()[i]) * state.coeffs()[i];
  cplx phase = std::abs(ip) > 0 ? ip / std::abs(ip) : cplx(1.0);
  double d2 = 0;
  for (size_t i = 0; i < rec.coeffs().size(); ++i)
    d2 += std::norm(state.coeffs()[i] - phase * rec.coeffs()[i]);
  return std::sqrt(d2);
}

} // namespace

MajoranaSet majorana_points(const SymmetricState &state, double tol) {
  const int n = state.n();
  cvec poly = char_poly(state);

  const double scale = std::sqrt(norm2(poly));
  const double zero_tol = 1e-13 * scale;

  int south = 0; // degree deficiency: leading coefficients ~ 0
  while (south < n && std::abs(poly.back()) <= zero_tol) {
    poly.pop_back();
    ++south;
  }
  int north = 0; // exact roots at z = 0
  while (int(poly.size()) > 1 && std::abs(poly.front()) <= zero_tol) {
    poly.erase(poly.begin());
    ++north;
  }

  cvec roots = polynomial_roots(poly);

  std::vector<WeightedPoint> pts;
  if (north > 0)
    pts.push_back({BlochPoint::north().unit_vector(), north});
  if (south > 0)
    pts.push_back({BlochPoint::south().unit_vector(), south});
  for (const auto &z : roots)
    pts.push_back({from_plane(z).unit_vector(), 1});

  // Multiple roots come back as tight clusters whose radius grows with the
  // multiplicity (eps^(1/m)); try coarse merges first and keep the coarsest
  // one that still reproduces the input coefficients.
  const double ladder[] = {3e-3, 7e-4, 1e-4, 1e-5, 0.0};
  for (double rung : ladder) {
    double thresh = std::max(tol, rung);
    auto cand = cluster_points(pts, thresh);
    MajoranaSet ms{std::move(cand)};
    if (reconstruction_error(ms, state) <= 1e-10)
      return ms;
    if (thresh <= tol)
      break;
  }
  return MajoranaSet{cluster_points(pts, tol)};
}

SymmetricState state_from_majorana(const MajoranaSet &points) {
  const int n = points.total();
  if (n < 1)
    throw std::invalid_argument("empty Majorana set");

  int south = 0;
  cvec poly{1.0}; // product of (z - w_i) over finite points, ascending
  for (const auto &e : points.entries) {
    auto z = to_plane(e.point);
    if (!z) {
      south += e.multiplicity;
      continue;
    }
    for (int m = 0; m < e.multiplicity; ++m) {
      cvec next(poly.size() + 1, 0.0);
      for (size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] += poly[i];
        next[i] -= poly[i] * *z;
      }
      poly = std::move(next);
    }
  }

  // Match p(z) = sum_k (-1)^k sqrt(C(n,k)) a_k z^{n-k}: the z^{n-k} term of
  // the product carries (-1)^k a_k sqrt(C(n,k)) up to one overall constant.
  cvec coeffs(size_t(n) + 1, 0.0);
  const int deg = int(poly.size()) - 1; // = n - south
  for (int j = 0; j <= deg; ++j) {
    int k = n - j; // z^j coefficient feeds a_{n-j}
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    coeffs[size_t(k)] = sign * poly[size_t(j)] / std::sqrt(binom(n, k));
  }
  (void)south; // k < south entries stay zero by construction

  double n2 = norm2(coeffs);
  if (n2 < 1e-300)
    throw std::invalid_argument("degenerate Majorana configuration");
  double inv = 1.0 / std::sqrt(n2);
  for (auto &c : coeffs)
    c *= inv;
  fix_global_phase(coeffs);
  return {n, std::move(coeffs)};
}

std::vector<int> degeneracy_profile(const MajoranaSet &points) {
  std::vector<int> mults;
  mults.reserve(points.entries.size());
  for (const auto &e : points.entries)
    mults.push_back(e.multiplicity);
  std::sort(mults.rbegin(), mults.rend());
  return mults;
}

MajoranaSet mobius(const MajoranaSet &points, cplx a, cplx b, cplx c, cplx d) {
  if (std::abs(a * d - b * c) < 1e-12)
    throw std::invalid_argument("Moebius parameters give a constant map");
  MajoranaSet out;
  for (const auto &e : points.entries) {
    auto z = to_plane(e.point);
    BlochPoint image;
    if (!z) { // point at infinity -> a/c
      if (std::abs(c) == 0.0)
        image = BlochPoint::south();
      else
        image = from_plane(a / c);
    } else {
      cplx denom = c * *z + d;
      if (std::abs(denom) < 1e-300 * std::max(1.0, std::abs(a * *z + b)))
        image = BlochPoint::south();
      else
        image = from_plane((a * *z + b) / denom);
    }
    out.entries.push_back({image, e.multiplicity});
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const auto &x, const auto &y) {
              if (x.point.theta != y.point.theta)
                return x.point.theta < y.point.theta;
              return x.point.phi < y.point.phi;
            });
  return out;
}

} // namespace symbell
