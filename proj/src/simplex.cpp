#include "symbell/simplex.hpp"

#include <cmath>
#include <vector>

namespace symbell {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr int kStallLimit = 40; // degenerate steps before Bland's rule

// Tableau layout: rows 0..m-1 constraints, row m = objective (reduced
// costs, maximization); columns 0..total-1 variables, column total = rhs.
struct Tableau {
  Eigen::MatrixXd t;
  std::vector<int> basis; // basic variable of each row
  int m, total;

  double &rhs(int r) { return t(r, total); }

  void pivot(int row, int col) {
    t.row(row) /= t(row, col);
    for (int r = 0; r <= m; ++r) {
      if (r == row)
        continue;
      double f = t(r, col);
      if (f != 0.0)
        t.row(r) -= f * t.row(row);
    }
    basis[size_t(row)] = col;
  }

  // Returns false at optimality.
  bool step(int ncols, bool bland) {
    int col = -1;
    if (bland) {
      for (int j = 0; j < ncols; ++j)
        if (t(m, j) > kPivotTol) {
          col = j;
          break;
        }
    } else {
      double best = kPivotTol;
      for (int j = 0; j < ncols; ++j)
        if (t(m, j) > best) {
          best = t(m, j);
          col = j;
        }
    }
    if (col < 0)
      return false;

    int row = -1;
    double best_ratio = 0;
    for (int r = 0; r < m; ++r) {
      double a = t(r, col);
      if (a <= kPivotTol)
        continue;
      double ratio = rhs(r) / a;
      if (row < 0 || ratio < best_ratio - 1e-12 ||
          (std::abs(ratio - best_ratio) <= 1e-12 &&
           basis[size_t(r)] < basis[size_t(row)])) {
        row = r;
        best_ratio = ratio;
      }
    }
    if (row < 0)
      throw lp_unbounded_error{};
    degenerate = best_ratio < 1e-12;
    pivot(row, col);
    return true;
  }
};

// The objective cell t(m, total) stores minus the current objective, so
// progress means it decreases.
int run(Tableau &tab, int ncols) {
  int iters = 0, stall = 0;
  bool bland = false;
  double last = tab.t(tab.m, tab.total);
  while (true) {
    bool degenerate = false;
    if (!tab.step(ncols, bland, degenerate))
      break;
    ++iters;
    double cur = tab.t(tab.m, tab.total);
    if (cur < last - 1e-12) {
      stall = 0;
      bland = false;
      last = cur;
    } else if (++stall > kStallLimit) {
      bland = true; // anti-cycling
    }
    if (iters > 200000)
      throw std::runtime_error("simplex iteration limit reached");
  }
  return iters;
}

} // namespace

LpSolution solve_lp(const LinearProgram &lp) {
  const int m = int(lp.A.rows());
  const int n = int(lp.A.cols());
  if (lp.b.size() != m || lp.c.size() != n)
    throw std::invalid_argument("inconsistent program dimensions");

  Tableau tab;
  tab.m = m;
  tab.total = n + m; // structural + artificial
  tab.t.setZero(m + 1, tab.total + 1);
  tab.basis.assign(size_t(m), 0);

  for (int r = 0; r < m; ++r) {
    double s = lp.b(r) >= 0 ? 1.0 : -1.0;
    tab.t.block(r, 0, 1, n) = s * lp.A.row(r);
    tab.t(r, n + r) = 1.0;
    tab.rhs(r) = s * lp.b(r);
    tab.basis[size_t(r)] = n + r;
  }

  // Phase 1: maximize -sum(artificials); price out the initial basis.
  for (int j = 0; j < n; ++j)
    tab.t(m, j) = tab.t.block(0, j, m, 1).sum();
  tab.t(m, tab.total) = tab.t.block(0, tab.total, m, 1).sum();
  run(tab, n); // artificials never re-enter: candidate columns < n

  // Residual infeasibility = sum of leftover artificial values.
  if (tab.t(m, tab.total) > 1e-7)
    throw lp_infeasible_error{};

  // Drive leftover artificial variables out of the basis where possible;
  // rows that cannot pivot are redundant and get neutralized.
  for (int r = 0; r < m; ++r) {
    if (tab.basis[size_t(r)] < n)
      continue;
    int col = -1;
    for (int j = 0; j < n; ++j)
      if (std::abs(tab.t(r, j)) > 1e-7) {
        col = j;
        break;
      }
    if (col >= 0)
      tab.pivot(r, col);
    else
      tab.t.row(r).setZero();
  }

  // Phase 2 objective: c over the current basis.
  tab.t.row(m).setZero();
  tab.t.block(m, 0, 1, n) = lp.c.transpose();
  for (int r = 0; r < m; ++r) {
    int bv = tab.basis[size_t(r)];
    if (bv < n && lp.c(bv) != 0.0)
      tab.t.row(m) -= lp.c(bv) * tab.t.row(r);
  }
  int iters = run(tab, n);

  LpSolution sol;
  sol.x = Eigen::VectorXd::Zero(n);
  for (int r = 0; r < m; ++r)
    if (tab.basis[size_t(r)] < n)
      sol.x(tab.basis[size_t(r)]) = tab.rhs(r);
  sol.objective = lp.c.dot(sol.x);
  sol.iterations = iters;

  // Certificate re-check against the original data.
  double resid = (lp.A * sol.x - lp.b).lpNorm<Eigen::Infinity>();
  if (resid > 1e-8 || sol.x.minCoeff() < -1e-10)
    throw lp_certificate_error(resid);
  return sol;
}

} // namespace symbell
