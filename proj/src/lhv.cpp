#include "symbell/lhv.hpp"

#include <algorithm>
#include <cmath>

namespace symbell {

namespace {

struct CompiledTerm {
  double coeff;
  unsigned long mask; // strategy bits constrained by this term
  unsigned long want; // required values at those bits
};

std::vector<CompiledTerm> compile_terms(const BellExpression &expr) {
  std::vector<CompiledTerm> out;
  out.reserve(expr.terms.size());
  for (const auto &t : expr.terms) {
    CompiledTerm c{t.coefficient, 0, 0};
    for (int q = 0; q < expr.n; ++q) {
      const auto &a = t.assignment[size_t(q)];
      if (!a)
        continue; // marginal over a local deterministic party sums to one
      unsigned long bit = 1ul << (2 * q + a->setting);
      c.mask |= bit;
      if (a->outcome)
        c.want |= bit;
    }
    out.push_back(c);
  }
  return out;
}

} // namespace

double evaluate_strategy(const BellExpression &expr,
                         const DeterministicStrategy &s) {
  double v = 0;
  for (const auto &c : compile_terms(expr))
    if ((s.code & c.mask) == c.want)
      v += c.coeff;
  return v;
}

std::pair<double, DeterministicStrategy>
lhv_bound_exhaustive(const BellExpression &expr) {
  const int n = expr.n;
  if (n > 13)
    throw std::length_error("deterministic enumeration capped at n = 13");
  const auto terms = compile_terms(expr);
  const unsigned long count = 1ul << (2 * n);

  double best = -1e300;
  unsigned long best_code = 0;
  for (unsigned long code = 0; code < count; ++code) {
    double v = 0;
    for (const auto &c : terms)
      if ((code & c.mask) == c.want)
        v += c.coeff;
    if (v > best) { // strict: keeps the smallest maximizing code
      best = v;
      best_code = code;
    }
  }
  return {best, DeterministicStrategy{n, best_code}};
}

int GroupedStrategy::outcome(int party, int setting,
                             const std::vector<int> &party_block,
                             const std::vector<int> &party_slot,
                             unsigned long all_settings) const {
  const int b = party_block[size_t(party)];
  const auto &members = blocks[size_t(b)];
  unsigned js = 0;
  for (size_t slot = 0; slot < members.size(); ++slot) {
    int p = members[slot];
    int sp = (p == party) ? setting : int((all_settings >> p) & 1);
    js |= unsigned(sp) << slot;
  }
  return int((tables[size_t(b)][js] >> party_slot[size_t(party)]) & 1);
}

namespace {

struct GroupedContext {
  std::vector<int> party_block, party_slot;
  std::vector<int> block_size;
};

GroupedContext make_context(int n, const std::vector<std::vector<int>> &blocks) {
  GroupedContext ctx;
  ctx.party_block.assign(size_t(n), -1);
  ctx.party_slot.assign(size_t(n), -1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    for (size_t slot = 0; slot < blocks[b].size(); ++slot) {
      int p = blocks[b][slot];
      if (p < 0 || p >= n || ctx.party_block[size_t(p)] != -1)
        throw std::invalid_argument("partition must cover each party once");
      ctx.party_block[size_t(p)] = int(b);
      ctx.party_slot[size_t(p)] = int(slot);
    }
    ctx.block_size.push_back(int(blocks[b].size()));
  }
  for (int p = 0; p < n; ++p)
    if (ctx.party_block[size_t(p)] < 0)
      throw std::invalid_argument("partition must cover every party");
  return ctx;
}

// Per block: joint setting index for this term (marginalized members read
// setting 0), plus the outcome bits the term requires of the block.
struct BlockRequirement {
  unsigned joint_setting;
  unsigned care = 0, want = 0;
};

std::vector<std::vector<BlockRequirement>>
compile_grouped(const BellExpression &expr,
                const std::vector<std::vector<int>> &blocks) {
  std::vector<std::vector<BlockRequirement>> out(expr.terms.size());
  for (size_t ti = 0; ti < expr.terms.size(); ++ti) {
    const auto &t = expr.terms[ti];
    std::vector<BlockRequirement> reqs(blocks.size());
    for (size_t b = 0; b < blocks.size(); ++b) {
      unsigned js = 0;
      for (size_t slot = 0; slot < blocks[b].size(); ++slot) {
        const auto &a = t.assignment[size_t(blocks[b][slot])];
        if (a && a->setting)
          js |= 1u << slot;
      }
      reqs[b].joint_setting = js;
      for (size_t slot = 0; slot < blocks[b].size(); ++slot) {
        const auto &a = t.assignment[size_t(blocks[b][slot])];
        if (!a)
          continue;
        reqs[b].care |= 1u << slot;
        if (a->outcome)
          reqs[b].want |= 1u << slot;
      }
    }
    out[ti] = std::move(reqs);
  }
  return out;
}

} // namespace

double evaluate_grouped(const BellExpression &expr, const GroupedStrategy &s) {
  make_context(expr.n, s.blocks); // validates the partition
  const auto reqs = compile_grouped(expr, s.blocks);
  double v = 0;
  for (size_t ti = 0; ti < expr.terms.size(); ++ti) {
    bool match = true;
    for (size_t b = 0; b < s.blocks.size() && match; ++b) {
      const auto &r = reqs[ti][b];
      match = (s.tables[b][r.joint_setting] & r.care) == r.want;
    }
    if (match)
      v += expr.terms[ti].coefficient;
  }
  return v;
}

std::pair<double, GroupedStrategy>
grouped_lhv_bound(const BellExpression &expr,
                  const std::vector<std::vector<int>> &partition) {
  const auto ctx = make_context(expr.n, partition);
  for (int sz : ctx.block_size)
    if (sz > 3)
      throw std::length_error("grouped enumeration caps block size at 3");

  double total = 1;
  std::vector<unsigned long> table_count(partition.size());
  for (size_t b = 0; b < partition.size(); ++b) {
    int sb = ctx.block_size[b];
    table_count[b] = 1ul << (sb << sb); // (2^sb)^(2^sb)
    total *= double(table_count[b]);
  }
  if (total > 1e8)
    throw std::length_error("grouped enumeration exceeds the strategy cap");

  const auto reqs = compile_grouped(expr, partition);

  GroupedStrategy strat;
  strat.blocks = partition;
  strat.tables.resize(partition.size());
  std::vector<unsigned long> counter(partition.size(), 0);

  auto fill_tables = [&] {
    for (size_t b = 0; b < partition.size(); ++b) {
      int sb = ctx.block_size[b];
      unsigned settings = 1u << sb;
      strat.tables[b].assign(settings, 0);
      for (unsigned j = 0; j < settings; ++j)
        strat.tables[b][j] =
            unsigned((counter[b] >> (sb * j)) & ((1ul << sb) - 1));
    }
  };

  double best = -1e300;
  GroupedStrategy best_strat;
  while (true) {
    fill_tables();
    double v = 0;
    for (size_t ti = 0; ti < expr.terms.size(); ++ti) {
      bool match = true;
      for (size_t b = 0; b < partition.size() && match; ++b) {
        const auto &r = reqs[ti][b];
        match = (strat.tables[b][r.joint_setting] & r.care) == r.want;
      }
      if (match)
        v += expr.terms[ti].coefficient;
    }
    if (v > best) {
      best = v;
      best_strat = strat;
    }
    // odometer: last block fastest
    size_t b = partition.size();
    while (b > 0) {
      --b;
      if (++counter[b] < table_count[b])
        break;
      counter[b] = 0;
      if (b == 0)
        return {best, best_strat};
    }
  }
}

GroupedStrategy partially_nonlocal_model(int n, int k) {
  if (n < 3 || k < 1 || k > n - 2)
    throw std::invalid_argument("model parameters out of range");
  GroupedStrategy s;
  s.blocks.push_back({0, 1});
  // joint setting is little-endian in block slots: index 1 = party 0 at
  // setting 1, index 2 = party 1 at setting 1.
  s.tables.push_back({0u, 3u, 3u, 2u});
  for (int p = 2; p < n; ++p) {
    s.blocks.push_back({p});
    if (p < n - k)
      s.tables.push_back({0u, 1u}); // echo the setting
    else
      s.tables.push_back({1u, 1u}); // constant 1
  }
  return s;
}

BoxDistribution box_from_strategy(const DeterministicStrategy &s) {
  auto box = BoxDistribution::zeros(s.n);
  const unsigned long dim = 1ul << s.n;
  for (unsigned long set = 0; set < dim; ++set) {
    unsigned long o = 0;
    for (int p = 0; p < s.n; ++p)
      o |= (unsigned long)(s.outcome(p, int((set >> p) & 1))) << p;
    box.at(set, o) = 1.0;
  }
  return box;
}

BoxDistribution box_from_grouped(const GroupedStrategy &s, int n) {
  const auto ctx = make_context(n, s.blocks);
  auto box = BoxDistribution::zeros(n);
  const unsigned long dim = 1ul << n;
  for (unsigned long set = 0; set < dim; ++set) {
    unsigned long o = 0;
    for (int p = 0; p < n; ++p) {
      int bit = s.outcome(p, int((set >> p) & 1), ctx.party_block,
                          ctx.party_slot, set);
      o |= (unsigned long)(bit) << p;
    }
    box.at(set, o) = 1.0;
  }
  return box;
}

} // namespace symbell
