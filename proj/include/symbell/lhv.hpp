#pragma once

#include "symbell/bell.hpp"

namespace symbell {

/// Deterministic local strategy: each party maps its setting bit to an
/// outcome bit. Encoded little-endian, two bits per party: bit 2p is the
/// outcome at setting 0, bit 2p+1 the outcome at setting 1.
struct DeterministicStrategy {
  int n = 0;
  unsigned long code = 0;

  int outcome(int party, int setting) const {
    return int((code >> (2 * party + setting)) & 1);
  }
};

/// Parties grouped into blocks that act as single (possibly nonlocal)
/// composite parties; each block maps joint settings to joint outcomes.
struct GroupedStrategy {
  std::vector<std::vector<int>> blocks;       // disjoint party indices
  std::vector<std::vector<unsigned>> tables;  // [block][joint setting] -> joint outcome

  int outcome(int party, int setting,
              const std::vector<int> &party_block,
              const std::vector<int> &party_slot,
              unsigned long all_settings) const;
};

double evaluate_strategy(const BellExpression &expr,
                         const DeterministicStrategy &s);

/// Exact maximum of expr over all 4^n deterministic strategies; the argmax
/// is the smallest code among maximizers. Throws above n = 13.
std::pair<double, DeterministicStrategy>
lhv_bound_exhaustive(const BellExpression &expr);

/// Exact maximum over grouped deterministic strategies. Block size is
/// capped at 3 and the total strategy count at 1e8.
std::pair<double, GroupedStrategy>
grouped_lhv_bound(const BellExpression &expr,
                  const std::vector<std::vector<int>> &partition);

double evaluate_grouped(const BellExpression &expr, const GroupedStrategy &s);

/// The explicit partially nonlocal model for L(n,k): parties {0,1} grouped,
/// the block answering 00 -> 00, 01 -> 11, 10 -> 11, 11 -> 01; parties
/// 2..n-k-1 echo their setting; the last k parties always answer 1.
/// Evaluates L(n,k) to exactly 1.
GroupedStrategy partially_nonlocal_model(int n, int k);

/// Deterministic strategies give 0/1 tables; useful as cross-checks.
BoxDistribution box_from_strategy(const DeterministicStrategy &s);
BoxDistribution box_from_grouped(const GroupedStrategy &s, int n);

} // namespace symbell
