#pragma once

#include <cstdint>

#include "ramsey/hypergraph.hpp"

namespace ramsey {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000'000ULL;

// Parameters of one random hypergraph draw. Every s-subset of 0..n-1 is a
// hyperedge independently with probability p.
struct SampleConfig {
  int n = 0;
  int s = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  // Cap on the number of candidate subsets the exact sampler will enumerate.
  std::uint64_t budget = kDefaultEnumerationBudget;
};

// Exact sampler: enumerates all C(n, s) candidate subsets and keeps each one
// iff hash(seed, subset) < p, so inclusion depends only on (seed, subset).
// Identical config gives a bit-identical hypergraph for any thread count.
// Throws BudgetExceededError when C(n, s) exceeds cfg.budget.
Hypergraph sample_hypergraph(const SampleConfig& cfg, int threads = 1);

// Sparse sampler for candidate spaces too large to enumerate: draws the edge
// count from Binomial(C(n,s), p), then that many distinct subsets uniformly
// by unranking. Same distribution as the exact sampler and deterministic in
// the seed, but inclusion is no longer a per-subset hash, so restricting the
// vertex set does not commute with sampling. Requires C(n,s) < 2^63 and
// p*C(n,s) <= 1e5.
Hypergraph sample_hypergraph_sparse(const SampleConfig& cfg);

struct ProbabilityRange {
  double lower = 0.0;
  double upper = 0.0;
};

// The inclusion-probability window n^(2-s-1/m2(K_{k-1})) .. n^(2-s-1/m2(K_k))
// in which the construction succeeds asymptotically. Requires k >= 3, s >= k.
ProbabilityRange p_range(int n, int s, int k);

// Probability giving expected edge count m: min(1, m / C(n, s)).
double p_for_expected_edges(int n, int s, double m);

}  // namespace ramsey
