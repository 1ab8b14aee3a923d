#pragma once

#include "symbell/bell.hpp"

namespace symbell {

struct OptimizeOptions {
  bool symmetric_restriction = false; // all parties share the same two bases
  int starts = 64;                    // multistart count (random + seeded)
  unsigned long seed = 0;
  double tol = 1e-8;       // simplex function-spread convergence
  int max_iters = 2000;    // per start
};

struct StartTrace {
  std::string kind; // "seed:..." or "random"
  double initial_value = 0;
  double final_value = 0;
  int iterations = 0;
  bool converged = false;
};

struct OptimizeResult {
  double best_value = 0;
  SettingsProfile best_settings;
  std::vector<StartTrace> traces;
};

/// Derivative-free multistart maximization of the expression value over the
/// measurement angles (4n parameters, or 4 under the symmetric restriction).
/// Starts always include sigma-z/sigma-x, the closed-form W/GHZ bases, and
/// the Majorana prescription where applicable, so the result dominates all
/// analytic seeds. Deterministic for fixed options.
OptimizeResult maximize_violation(const SymmetricState &state,
                                  const BellExpression &expr,
                                  const OptimizeOptions &opts = {});

struct GeometricMeasure {
  double eg_bits = 0;        // -log2 max |<p^n|psi>|^2
  double max_overlap_sq = 0; // over product symmetric states
  BlochPoint maximizer;
};

/// Dense sphere grid (129 x 256) followed by local refinement. The closest
/// product state to a symmetric state can be taken symmetric, so the search
/// space is one Bloch point.
GeometricMeasure geometric_measure(const SymmetricState &state);

/// Tangle (squared concurrence) of the two-party reduced state; any pair,
/// by permutation symmetry. Built from the Dicke coefficients in the
/// three-dimensional symmetric two-qubit subspace.
double pair_tangle(const SymmetricState &state);

struct CkwReport {
  double lhs = 0; // (n-1) * pair tangle
  double rhs = 0; // one-vs-rest tangle, 4 det(rho_A)
  bool satisfied = false;
};

/// Monogamy-of-entanglement trade-off: sum of pairwise tangles against the
/// one-vs-rest tangle.
CkwReport ckw_check(const SymmetricState &state);

} // namespace symbell
