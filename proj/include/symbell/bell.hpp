#pragma once

#include <string>

#include "symbell/measurement.hpp"

namespace symbell {

/// One signed probability term of a Bell expression.
struct Term {
  double coefficient = 0.0;
  TermAssignment assignment; // size n; unassigned parties are marginalized
};

/// Signed linear combination of (possibly marginal) outcome probabilities
/// with its known deterministic-LHV bound and algebraic maximum over
/// normalized boxes.
struct BellExpression {
  std::string name;
  int n = 0;
  std::vector<Term> terms;
  double classical_bound = 0.0;
  double algebraic_max = 0.0;
};

/// P(0..0|0..0) - sum_i P(0..0|setting 1 at party i) - P(1..1|1..1) <= 0.
BellExpression build_Pn(int n);

/// P^n minus the all-ones marginals over n-1 down to n-d+1 parties.
BellExpression build_Qnd(int n, int d);

/// Dicke-state inequality: all arrangements of n-k zeros / k ones at
/// settings 0..0, minus every ordered pair measuring setting 1 with outcomes
/// (0,1) amid the remaining pattern, minus P(0..0|1..1) and P(1..1|1..1).
BellExpression build_L(int n, int k);

/// All-positive rewrites; identically P^n + (n+1) resp. Q^n_d + (n+d) on
/// nonsignaling boxes, with LHV bounds n+1 resp. n+d.
BellExpression build_Pn_prime(int n);
BellExpression build_Qnd_prime(int n, int d);

/// Parse "P", "Q:3", "L:2", "Pprime", "Qprime:3" for n parties.
BellExpression parse_expression(const std::string &spec, int n);

struct EvaluationReport {
  double value = 0.0;
  std::vector<double> term_probabilities; // aligned with expr.terms
};

EvaluationReport evaluate_state(const BellExpression &expr,
                                const SymmetricState &state,
                                const SettingsProfile &settings);

/// Evaluates the same functional on a stored table. Marginal terms read the
/// unassigned parties at setting 0, which nonsignaling makes immaterial;
/// boxes with a nonsignaling defect above ns_tol are rejected.
double evaluate_box(const BellExpression &expr, const BoxDistribution &box,
                    double ns_tol = 1e-6);

} // namespace symbell
