#pragma once

#include <cstdint>
#include <vector>

#include "ramsey/conformal.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/hypergraph.hpp"
#include "ramsey/rational.hpp"

namespace ramsey {

// Exponent governing the expected number of hyperedge collections tracing a
// pair-cover C = {V_1..V_l} of a k-set:
//   (l - 1) / m2(K_k) + sum_i (|V_i| - 2).
// Exact rational; the perfect pair-cover attains k - 2. Requires |base| = k,
// k >= 3.
Rational cover_exponent(const PairCover& cover, int k);

struct MinCoverExponentResult {
  Rational min_exponent;
  PairCover argmin;                    // first minimiser in enumeration order
  std::uint64_t covers_enumerated = 0; // number of non-trivial pair-covers
  std::uint64_t argmin_count = 0;
};

// Enumerates every non-trivial pair-cover of a fixed k-set and minimises the
// exponent. Supported for k in {3, 4}; the family count grows as
// 2^(2^k - k - 1), so larger k is rejected with UnsupportedError.
MinCoverExponentResult min_cover_exponent_bruteforce(int k);

// Replaces part `part_index` by all of its pairs (set union with the rest).
// The result is again a pair-cover of the same base.
PairCover expand_part(const PairCover& cover, std::size_t part_index);

// Exponents along the stepwise reduction of `cover` to the perfect cover,
// expanding original parts in descending size order; front() is the exponent
// of `cover` itself, back() equals k - 2. Never increasing.
std::vector<Rational> expansion_chain_exponents(const PairCover& cover);

// Exact expected number of hyperedge collections {E_1..E_l} with
// E_i ∩ S = V_i: prod_i p * C(n - k, s - |V_i|). Requires n >= k + s and
// s >= max |V_i|.
double expected_trace_collections(int n, int s, int k, double p,
                                  const PairCover& cover);

// Upper bound C(n,s) * C(s,2) * C(n-2,s-2) * p^2 on the expected number of
// hyperedge pairs sharing at least two vertices.
double expected_overlapping_pairs_bound(int n, int s, double p);

struct McStats {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation across trials
  std::uint64_t trials = 0;

  double std_error() const;
};

// Monte Carlo mean of the collection count matched by
// expected_trace_collections, over seeded independent hypergraph draws.
// Counts only hyperedges with E ∩ S = V_i exactly.
McStats mc_trace_collections(const PairCover& cover, int n, int s, double p,
                             std::uint64_t trials, std::uint64_t seed,
                             int threads = 1);

// Monte Carlo mean of the number of hyperedge pairs sharing >= 2 vertices.
McStats mc_overlapping_pairs(int n, int s, double p, std::uint64_t trials,
                             std::uint64_t seed, int threads = 1);

// Edge pattern whose edges must be hit by pairwise distinct hyperedges.
using SubgraphPattern = Graph;

// True iff distinct hyperedges E_1..E_m of h exist with e_i ⊆ E_i for the
// pattern's edges e_1..e_m (bipartite matching).
bool pattern_embeds(const SubgraphPattern& pattern, const Hypergraph& h);

struct McBoundReport {
  double frequency = 0.0;
  double bound = 0.0;   // (p * C(n-2, s-2))^e(pattern)
  std::uint64_t trials = 0;
  double sigma = 0.0;   // binomial standard error of the frequency
};

// Monte Carlo estimate of the probability that the pattern embeds into a
// random hypergraph draw, together with the per-edge product bound.
McBoundReport mc_pattern_embedding(const SubgraphPattern& pattern, int n,
                                   int s, double p, std::uint64_t trials,
                                   std::uint64_t seed, int threads = 1);

}  // namespace ramsey
