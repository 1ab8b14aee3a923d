#include "symbell/analysis.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>

#include "symbell/prescription.hpp"

namespace symbell {

namespace {
constexpr double kPi = 3.141592653589793238462643;

// ---- Nelder-Mead (minimization), with restart shrinkage ----------------

struct NmOutcome {
  std::vector<double> x;
  double f = 0;
  int iterations = 0;
  bool converged = false;
};

template <typename F>
NmOutcome nelder_mead(F &&f, std::vector<double> x0, double step, double tol,
                      int max_iters) {
  const size_t d = x0.size();
  std::vector<std::vector<double>> xs(d + 1, x0);
  std::vector<double> fs(d + 1);
  for (size_t i = 0; i < d; ++i)
    xs[i + 1][i] += step;
  for (size_t i = 0; i <= d; ++i)
    fs[i] = f(xs[i]);

  NmOutcome out;
  int it = 0;
  auto order = [&] {
    std::vector<size_t> idx(d + 1);
    for (size_t i = 0; i <= d; ++i)
      idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](size_t a, size_t b) { return fs[a] < fs[b]; });
    std::vector<std::vector<double>> nxs(d + 1);
    std::vector<double> nfs(d + 1);
    for (size_t i = 0; i <= d; ++i) {
      nxs[i] = xs[idx[i]];
      nfs[i] = fs[idx[i]];
    }
    xs = std::move(nxs);
    fs = std::move(nfs);
  };

  for (; it < max_iters; ++it) {
    order();
    if (fs[d] - fs[0] < tol * (1.0 + std::abs(fs[0]))) {
      out.converged = true;
      break;
    }
    std::vector<double> centroid(d, 0.0);
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j)
        centroid[j] += xs[i][j] / double(d);

    auto blend = [&](double t) {
      std::vector<double> p(d);
      for (size_t j = 0; j < d; ++j)
        p[j] = centroid[j] + t * (xs[d][j] - centroid[j]);
      return p;
    };

    auto xr = blend(-1.0); // reflection
    double fr = f(xr);
    if (fr < fs[0]) {
      auto xe = blend(-2.0); // expansion
      double fe = f(xe);
      if (fe < fr) {
        xs[d] = std::move(xe);
        fs[d] = fe;
      } else {
        xs[d] = std::move(xr);
        fs[d] = fr;
      }
    } else if (fr < fs[d - 1]) {
      xs[d] = std::move(xr);
      fs[d] = fr;
    } else {
      auto xc = blend(fr < fs[d] ? -0.5 : 0.5); // contraction
      double fc = f(xc);
      if (fc < std::min(fr, fs[d])) {
        xs[d] = std::move(xc);
        fs[d] = fc;
      } else { // shrink toward the best vertex
        for (size_t i = 1; i <= d; ++i) {
          for (size_t j = 0; j < d; ++j)
            xs[i][j] = xs[0][j] + 0.5 * (xs[i][j] - xs[0][j]);
          fs[i] = f(xs[i]);
        }
      }
    }
  }
  order();
  out.x = xs[0];
  out.f = fs[0];
  out.iterations = it;
  return out;
}

template <typename F>
NmOutcome nm_with_restarts(F &&f, std::vector<double> x0, double tol,
                           int max_iters) {
  NmOutcome best = nelder_mead(f, std::move(x0), 0.35, tol, max_iters);
  for (double step : {0.08, 0.02}) { // shrinking restarts around the best
    NmOutcome r = nelder_mead(f, best.x, step, tol, max_iters);
    r.iterations += best.iterations;
    if (r.f < best.f)
      best = std::move(r);
    else
      best.iterations = r.iterations;
  }
  return best;
}

// ---- angle packing ------------------------------------------------------

SettingsProfile unpack_settings(const std::vector<double> &x, int n,
                                bool symmetric) {
  SettingsProfile sp;
  sp.parties.resize(size_t(n));
  for (int q = 0; q < n; ++q) {
    size_t base = symmetric ? 0 : size_t(4 * q);
    sp.parties[size_t(q)] = {
        Basis{BlochPoint(x[base + 0], x[base + 1])},
        Basis{BlochPoint(x[base + 2], x[base + 3])}};
  }
  return sp;
}

std::vector<double> pack_settings(const SettingsProfile &sp, bool symmetric) {
  std::vector<double> x;
  const int parties = symmetric ? 1 : sp.n();
  for (int q = 0; q < parties; ++q) {
    for (int s = 0; s < 2; ++s) {
      x.push_back(sp.basis(q, s).bloch0.theta);
      x.push_back(sp.basis(q, s).bloch0.phi);
    }
  }
  return x;
}

} // namespace

OptimizeResult maximize_violation(const SymmetricState &state,
                                  const BellExpression &expr,
                                  const OptimizeOptions &opts) {
  if (expr.n != state.n())
    throw std::invalid_argument("party count mismatch");
  if (opts.starts < 1 || opts.tol <= 0)
    throw std::invalid_argument("bad optimizer options");
  const int n = state.n();
  const bool sym = opts.symmetric_restriction;

  auto objective = [&](const std::vector<double> &x) {
    return -evaluate_state(expr, state, unpack_settings(x, n, sym)).value;
  };

  std::vector<std::pair<std::string, std::vector<double>>> starts;
  auto add_seed = [&](const std::string &kind, const SettingsProfile &sp) {
    starts.emplace_back("seed:" + kind, pack_settings(sp, sym));
  };
  add_seed("sigma-zx", dicke_sigma_settings(n));
  add_seed("sigma-xz", SettingsProfile::uniform(n, Basis::sigma_x(),
                                                Basis::sigma_z()));
  if (n >= 3) {
    add_seed("w-bases", w_settings(n));
    add_seed("ghz-bases", ghz_settings(n));
    try {
      add_seed("prescription", prescribe(state).settings);
    } catch (const std::exception &) {
      // Dicke states have no prescription; the sigma seeds cover them.
    }
  }

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const size_t dim = sym ? 4 : size_t(4 * n);
  while (int(starts.size()) < opts.starts) {
    std::vector<double> x(dim);
    for (size_t i = 0; i < dim; i += 2) {
      x[i] = std::acos(2.0 * u01(rng) - 1.0); // area-uniform polar angle
      x[i + 1] = 2.0 * kPi * u01(rng);
    }
    starts.emplace_back("random", std::move(x));
  }

  OptimizeResult res;
  res.best_value = -1e300;
  for (const auto &[kind, x0] : starts) {
    StartTrace tr;
    tr.kind = kind;
    tr.initial_value = -objective(x0);
    NmOutcome nm = nm_with_restarts(objective, x0, opts.tol, opts.max_iters);
    tr.final_value = -nm.f;
    tr.iterations = nm.iterations;
    tr.converged = nm.converged;
    // A start can only improve on its seed value; keep the better of the two.
    double val = std::max(tr.initial_value, tr.final_value);
    const auto &xbest = tr.final_value >= tr.initial_value ? nm.x : x0;
    if (val > res.best_value) {
      res.best_value = val;
      res.best_settings = unpack_settings(xbest, n, sym);
    }
    res.traces.push_back(std::move(tr));
  }
  return res;
}

GeometricMeasure geometric_measure(const SymmetricState &state) {
  const int n = state.n();
  auto overlap_sq = [&](double theta, double phi) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    const cplx es = std::polar(s, -phi);
    cplx acc = 0, pw = 1.0;
    for (int k = 0; k <= n; ++k) {
      acc += state.coeff(k) * std::sqrt(binom(n, k)) * std::pow(c, n - k) * pw;
      pw *= es;
    }
    return std::norm(acc);
  };

  const int nt = 129, np = 256;
  double best = -1.0, bt = 0, bp = 0;
  for (int i = 0; i < nt; ++i) {
    double theta = kPi * i / (nt - 1);
    for (int j = 0; j < np; ++j) {
      double phi = 2 * kPi * j / np;
      double v = overlap_sq(theta, phi);
      if (v > best) {
        best = v;
        bt = theta;
        bp = phi;
      }
    }
  }

  auto neg = [&](const std::vector<double> &x) {
    return -overlap_sq(x[0], x[1]);
  };
  NmOutcome nm = nelder_mead(neg, {bt, bp}, 0.02, 1e-14, 400);
  NmOutcome nm2 = nelder_mead(neg, nm.x, 1e-4, 1e-15, 200);
  if (nm2.f < nm.f)
    nm = nm2;

  GeometricMeasure gm;
  gm.max_overlap_sq = std::max(best, -nm.f);
  gm.maximizer = -nm.f >= best ? BlochPoint(nm.x[0], nm.x[1])
                               : BlochPoint(bt, bp);
  gm.eg_bits = -std::log2(gm.max_overlap_sq);
  return gm;
}

namespace {

// Unnormalized (n-2)-party components phi_j with two parties split off:
// |psi> = sum_j |S(2,j)> (x) |phi_j>.
std::array<cvec, 3> two_party_split(const SymmetricState &state) {
  const int n = state.n();
  std::array<cvec, 3> phi;
  for (int j = 0; j <= 2; ++j)
    phi[size_t(j)].assign(size_t(n - 1), 0.0);
  for (int m = 0; m <= n - 2; ++m)
    for (int j = 0; j <= 2; ++j) {
      double w = std::sqrt(binom(2, j) * binom(n - 2, m) / binom(n, m + j));
      phi[size_t(j)][size_t(m)] = state.coeff(m + j) * w;
    }
  return phi;
}

} // namespace

double pair_tangle(const SymmetricState &state) {
  if (state.n() < 3)
    throw std::invalid_argument("pair tangle needs n >= 3");
  const auto phi = two_party_split(state);

  // Gram matrix in the symmetric two-qubit basis {|S(2,0)>,|S(2,1)>,|S(2,2)>}.
  Eigen::Matrix3cd gram;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      cplx g = 0;
      for (size_t m = 0; m < phi[size_t(a)].size(); ++m)
        g += phi[size_t(a)][m] * std::conj(phi[size_t(b)][m]);
      gram(a, b) = g; // <phi_b|phi_a>
    }

  // Embed into the 4x4 two-qubit space; |S(2,1)> = (|01>+|10>)/sqrt(2).
  Eigen::Matrix<cplx, 4, 3> embed = Eigen::Matrix<cplx, 4, 3>::Zero();
  embed(0, 0) = 1;
  embed(1, 1) = 1 / std::sqrt(2.0);
  embed(2, 1) = 1 / std::sqrt(2.0);
  embed(3, 2) = 1;
  Eigen::Matrix4cd rho = embed * gram * embed.adjoint();

  Eigen::Matrix4cd spinflip = Eigen::Matrix4cd::Zero(); // sigma_y (x) sigma_y
  spinflip(0, 3) = -1;
  spinflip(1, 2) = 1;
  spinflip(2, 1) = 1;
  spinflip(3, 0) = -1;

  Eigen::Matrix4cd R = rho * spinflip * rho.conjugate() * spinflip;
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(R);
  std::array<double, 4> lam{};
  for (int i = 0; i < 4; ++i)
    lam[size_t(i)] = std::sqrt(std::max(0.0, es.eigenvalues()[i].real()));
  std::sort(lam.rbegin(), lam.rend());
  double c = std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
  return c * c;
}

CkwReport ckw_check(const SymmetricState &state) {
  const int n = state.n();
  if (n < 3)
    throw std::invalid_argument("monogamy check needs n >= 3");

  // One-party reduced state from the single-split Dicke recursion.
  Eigen::Matrix2cd rho_a = Eigen::Matrix2cd::Zero();
  for (int b = 0; b < 2; ++b)
    for (int c = 0; c < 2; ++c) {
      cplx g = 0;
      for (int m = 0; m <= n - 1; ++m) {
        double wb = std::sqrt(binom(n - 1, m) / binom(n, m + b)) *
                    std::sqrt(binom(1, b));
        double wc = std::sqrt(binom(n - 1, m) / binom(n, m + c)) *
                    std::sqrt(binom(1, c));
        g += state.coeff(m + b) * wb * std::conj(state.coeff(m + c)) * wc;
      }
      rho_a(b, c) = g;
    }

  CkwReport rep;
  rep.lhs = double(n - 1) * pair_tangle(state);
  rep.rhs = 4.0 * std::abs(rho_a.determinant());
  rep.satisfied = rep.lhs <= rep.rhs + 1e-9;
  return rep;
}

} // namespace symbell
