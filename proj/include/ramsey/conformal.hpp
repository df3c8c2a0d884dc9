#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ramsey/hypergraph.hpp"

namespace ramsey {

// Family of distinct subsets (each of size >= 2) of a base set S such that
// every pair of S lies in some part. Canonical: base and parts sorted, the
// part list sorted lexicographically.
struct PairCover {
  std::vector<int> base;
  std::vector<std::vector<int>> parts;

  // Canonicalizes and validates all invariants, including full pair coverage.
  static PairCover make(std::vector<int> base,
                        std::vector<std::vector<int>> parts);

  std::size_t part_count() const { return parts.size(); }
  // The trivial cover is {S} itself.
  bool is_trivial() const {
    return parts.size() == 1 && parts.front() == base;
  }
  bool is_perfect() const;
};

// All 2-subsets of {0..k-1}.
PairCover perfect_pair_cover(int k);

// True iff every pair of S is inside some part. Throws std::invalid_argument
// when a part is not a >=2-subset of S or parts repeat.
bool is_pair_cover(const std::vector<std::vector<int>>& parts,
                   const std::vector<int>& S);

// { E ∩ S : E hyperedge, |E ∩ S| >= 2 }, deduplicated, canonical.
std::vector<std::vector<int>> pair_trace(const Hypergraph& h,
                                         const std::vector<int>& S);

// All k-cliques of the primal graph not contained in any single hyperedge.
// Empty result <=> h is k-conformal. Requires 3 <= k <= s.
std::vector<std::vector<int>> enumerate_noncovered_cliques(const Hypergraph& h,
                                                           int k,
                                                           int threads = 1);

struct PruneReport {
  std::vector<std::vector<int>> removed_for_linearity;
  std::vector<std::vector<int>> removed_for_conformality;
  std::uint64_t surviving = 0;

  std::string to_json() const;
  static PruneReport from_json(const std::string& text);

  bool operator==(const PruneReport&) const = default;
};

// Deterministic greedy repair. First linearity: offending hyperedge pairs are
// visited in lexicographic order and the lexicographically larger member is
// dropped. Then conformality: while an uncovered k-clique exists, take the
// lexicographically first one and drop the lexicographically first hyperedge
// containing at least one of its pairs. The result is linear and k-conformal.
std::pair<Hypergraph, PruneReport> prune_to_conformal(const Hypergraph& h,
                                                      int k);

// Same repair run for several clique sizes (ascending passes over the shared
// state). Conformality for every listed size holds on output.
std::pair<Hypergraph, PruneReport> prune_to_conformal(
    const Hypergraph& h, std::span<const int> clique_sizes);

}  // namespace ramsey
