#include "symbell/bell.hpp"

#include <algorithm>
#include <cmath>

namespace symbell {

namespace {

TermAssignment full_assignment(int n, int setting, unsigned long outcomes) {
  TermAssignment a(size_t(n));
  for (int q = 0; q < n; ++q)
    a[size_t(q)] = SettingOutcome{setting, int((outcomes >> q) & 1)};
  return a;
}

void check_n(int n, int min_n, const char *what) {
  if (n < min_n)
    throw std::invalid_argument(std::string(what) + ": party count too small");
}

} // namespace

BellExpression build_Pn(int n) {
  check_n(n, 2, "P^n");
  BellExpression e;
  e.name = "P" + std::to_string(n);
  e.n = n;
  e.classical_bound = 0.0;
  e.algebraic_max = 1.0;

  e.terms.push_back({+1.0, full_assignment(n, 0, 0)});
  for (int i = 0; i < n; ++i) {
    TermAssignment a = full_assignment(n, 0, 0);
    a[size_t(i)] = SettingOutcome{1, 0};
    e.terms.push_back({-1.0, std::move(a)});
  }
  e.terms.push_back({-1.0, full_assignment(n, 1, (1ul << n) - 1)});
  return e;
}

BellExpression build_Qnd(int n, int d) {
  check_n(n, 3, "Q^n_d");
  if (d < 2 || n - d + 1 < 2)
    throw std::invalid_argument("Q^n_d: degeneracy parameter out of range");
  BellExpression e = build_Pn(n);
  e.name = "Q" + std::to_string(n) + "_" + std::to_string(d);
  for (int j = n - 1; j >= n - d + 1; --j) {
    TermAssignment a(size_t(n)); // parties j..n-1 marginalized
    for (int q = 0; q < j; ++q)
      a[size_t(q)] = SettingOutcome{1, 1};
    e.terms.push_back({-1.0, std::move(a)});
  }
  return e;
}

BellExpression build_L(int n, int k) {
  check_n(n, 3, "L");
  if (k < 1 || k > n - 2)
    throw std::invalid_argument("L: excitation count out of range");
  BellExpression e;
  e.name = "L" + std::to_string(n) + "_" + std::to_string(k);
  e.n = n;
  e.classical_bound = 0.0;
  // At most one of the (disjoint) positive terms can reach 1 on a
  // normalized box, so the maximum is 1 even though C(n,k) carry +1.
  e.algebraic_max = 1.0;

  const unsigned long dim = 1ul << n;
  for (unsigned long o = 0; o < dim; ++o)
    if (popcount_n(o) == k)
      e.terms.push_back({+1.0, full_assignment(n, 0, o)});

  // Ordered pairs (i -> outcome 0, j -> outcome 1) at setting 1; the other
  // parties carry n-k-1 zeros and k-1 ones at setting 0.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j)
        continue;
      const unsigned long rest_dim = 1ul << (n - 2);
      for (unsigned long rest = 0; rest < rest_dim; ++rest) {
        if (popcount_n(rest) != k - 1)
          continue;
        TermAssignment a(size_t(n));
        a[size_t(i)] = SettingOutcome{1, 0};
        a[size_t(j)] = SettingOutcome{1, 1};
        int bit = 0;
        for (int q = 0; q < n; ++q) {
          if (q == i || q == j)
            continue;
          a[size_t(q)] = SettingOutcome{0, int((rest >> bit) & 1)};
          ++bit;
        }
        e.terms.push_back({-1.0, std::move(a)});
      }
    }

  e.terms.push_back({-1.0, full_assignment(n, 1, 0)});
  e.terms.push_back({-1.0, full_assignment(n, 1, dim - 1)});
  return e;
}

BellExpression build_Pn_prime(int n) {
  check_n(n, 2, "P^n'");
  BellExpression e;
  e.name = "P" + std::to_string(n) + "'";
  e.n = n;
  e.classical_bound = double(n + 1);
  e.algebraic_max = double(n + 2);

  const unsigned long dim = 1ul << n;
  e.terms.push_back({+1.0, full_assignment(n, 0, 0)});
  for (int i = 0; i < n; ++i) {
    for (unsigned long o = 1; o < dim; ++o) { // every outcome but 0..0
      TermAssignment a = full_assignment(n, 0, o);
      a[size_t(i)] = SettingOutcome{1, int((o >> i) & 1)};
      e.terms.push_back({+1.0, std::move(a)});
    }
  }
  for (unsigned long o = 0; o < dim - 1; ++o) // every outcome but 1..1
    e.terms.push_back({+1.0, full_assignment(n, 1, o)});
  return e;
}

BellExpression build_Qnd_prime(int n, int d) {
  check_n(n, 3, "Q^n_d'");
  if (d < 2 || n - d + 1 < 2)
    throw std::invalid_argument("Q^n_d': degeneracy parameter out of range");
  BellExpression e = build_Pn_prime(n);
  e.name = "Q" + std::to_string(n) + "_" + std::to_string(d) + "'";
  e.classical_bound = double(n + d);
  e.algebraic_max = double(n + d + 1);

  // The dropped marginals reappear as their complements at full setting 1:
  // sum over first-j-party outcomes != 1..1, remaining parties marginalized.
  for (int j = n - 1; j >= n - d + 1; --j) {
    const unsigned long jdim = 1ul << j;
    for (unsigned long o = 0; o < jdim - 1; ++o) {
      TermAssignment a(size_t(n));
      for (int q = 0; q < j; ++q)
        a[size_t(q)] = SettingOutcome{1, int((o >> q) & 1)};
      e.terms.push_back({+1.0, std::move(a)});
    }
  }
  return e;
}

BellExpression parse_expression(const std::string &spec, int n) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string arg =
      colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto iarg = [&] {
    if (arg.empty())
      throw std::invalid_argument("expression " + head + " needs a parameter");
    return std::stoi(arg);
  };
  if (head == "P")
    return build_Pn(n);
  if (head == "Q")
    return build_Qnd(n, iarg());
  if (head == "L")
    return build_L(n, iarg());
  if (head == "Pprime" || head == "P'")
    return build_Pn_prime(n);
  if (head == "Qprime" || head == "Q'")
    return build_Qnd_prime(n, iarg());
  throw std::invalid_argument("unknown expression spec: " + spec);
}

EvaluationReport evaluate_state(const BellExpression &expr,
                                const SymmetricState &state,
                                const SettingsProfile &settings) {
  if (expr.n != state.n() || expr.n != settings.n())
    throw std::invalid_argument("party count mismatch");
  EvaluationReport rep;
  rep.term_probabilities.reserve(expr.terms.size());
  for (const auto &t : expr.terms) {
    double p = term_probability(state, settings, t.assignment);
    rep.term_probabilities.push_back(p);
    rep.value += t.coefficient * p;
  }
  return rep;
}

double evaluate_box(const BellExpression &expr, const BoxDistribution &box,
                    double ns_tol) {
  if (expr.n != box.n)
    throw std::invalid_argument("party count mismatch");
  const double defect = nonsignaling_defect(box);
  if (defect > ns_tol)
    throw signaling_box_error(defect);

  const int n = expr.n;
  double value = 0;
  for (const auto &t : expr.terms) {
    unsigned long s = 0, o = 0, free_mask = 0;
    for (int q = 0; q < n; ++q) {
      const auto &a = t.assignment[size_t(q)];
      if (!a) {
        free_mask |= 1ul << q;
        continue;
      }
      s |= (unsigned long)(a->setting) << q;
      o |= (unsigned long)(a->outcome) << q;
    }
    // Marginalize by summing the free parties' outcomes (settings stay 0).
    double p = 0;
    unsigned long sub = free_mask;
    while (true) {
      p += box.at(s, o | sub);
      if (sub == 0)
        break;
      sub = (sub - 1) & free_mask;
    }
    value += t.coefficient * p;
  }
  return value;
}

} // namespace symbell
