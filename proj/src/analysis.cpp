#include "ramsey/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

#include "ramsey/combinatorics.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/hash_rng.hpp"
#include "ramsey/parallel.hpp"
#include "ramsey/sampler.hpp"

namespace ramsey {

Rational cover_exponent(const PairCover& cover, int k) {
  if (k < 3) throw std::invalid_argument("cover_exponent: need k >= 3");
  if (static_cast<int>(cover.base.size()) != k)
    throw std::invalid_argument("cover_exponent: base is not a k-set");
  if (!is_pair_cover(cover.parts, cover.base))
    throw std::invalid_argument("cover_exponent: invalid pair-cover");
  Rational result =
      Rational(static_cast<std::int64_t>(cover.parts.size()) - 1) /
      m2_clique(k);
  for (const auto& part : cover.parts)
    result += Rational(static_cast<std::int64_t>(part.size()) - 2);
  return result;
}

MinCoverExponentResult min_cover_exponent_bruteforce(int k) {
  if (k != 3 && k != 4)
    throw UnsupportedError(
        "min_cover_exponent_bruteforce: enumeration supported for k in {3, 4} "
        "only");

  std::vector<int> base(k);
  for (int i = 0; i < k; ++i) base[i] = i;

  // Candidate parts: all subsets of size >= 2, with a pair bitmask each.
  std::vector<std::vector<int>> candidates;
  std::vector<std::uint32_t> pair_masks;
  const int full_pairs = k * (k - 1) / 2;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<int> part;
    for (int v = 0; v < k; ++v)
      if (mask & (1u << v)) part.push_back(v);
    std::uint32_t pairs = 0;
    int pair_index = 0;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b, ++pair_index)
        if ((mask & (1u << a)) && (mask & (1u << b)))
          pairs |= 1u << pair_index;
    candidates.push_back(std::move(part));
    pair_masks.push_back(pairs);
  }
  std::vector<std::size_t> order(candidates.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return candidates[a] < candidates[b];
  });

  const std::uint32_t all_pairs = (1u << full_pairs) - 1;
  const std::size_t whole_set =
      static_cast<std::size_t>(std::find_if(order.begin(), order.end(),
                                            [&](std::size_t i) {
                                              return candidates[i].size() ==
                                                     static_cast<std::size_t>(k);
                                            }) -
                               order.begin());

  MinCoverExponentResult result;
  bool have_min = false;
  const std::uint64_t families = 1ULL << candidates.size();
  for (std::uint64_t family = 1; family < families; ++family) {
    std::uint32_t covered = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
      if (family & (1ULL << i)) covered |= pair_masks[order[i]];
    if (covered != all_pairs) continue;
    if (family == (1ULL << whole_set)) continue;  // the trivial cover {S}
    ++result.covers_enumerated;

    Rational exponent = Rational(std::popcount(family) - 1) / m2_clique(k);
    for (std::size_t i = 0; i < order.size(); ++i)
      if (family & (1ULL << i))
        exponent += Rational(
            static_cast<std::int64_t>(candidates[order[i]].size()) - 2);

    if (!have_min || exponent < result.min_exponent) {
      have_min = true;
      result.min_exponent = exponent;
      result.argmin_count = 1;
      std::vector<std::vector<int>> parts;
      for (std::size_t i = 0; i < order.size(); ++i)
        if (family & (1ULL << i)) parts.push_back(candidates[order[i]]);
      result.argmin = PairCover::make(base, std::move(parts));
    } else if (exponent == result.min_exponent) {
      ++result.argmin_count;
    }
  }
  return result;
}

PairCover expand_part(const PairCover& cover, std::size_t part_index) {
  if (part_index >= cover.parts.size())
    throw std::invalid_argument("expand_part: part index out of range");
  std::set<std::vector<int>> parts(cover.parts.begin(), cover.parts.end());
  const std::vector<int> target = cover.parts[part_index];
  parts.erase(target);
  for (std::size_t a = 0; a < target.size(); ++a)
    for (std::size_t b = a + 1; b < target.size(); ++b)
      parts.insert({target[a], target[b]});
  return PairCover::make(cover.base,
                         std::vector<std::vector<int>>(parts.begin(), parts.end()));
}

std::vector<Rational> expansion_chain_exponents(const PairCover& cover) {
  const int k = static_cast<int>(cover.base.size());
  // Original parts in descending size (ties lexicographic), as the reduction
  // visits them.
  std::vector<std::vector<int>> schedule = cover.parts;
  std::stable_sort(schedule.begin(), schedule.end(),
                   [](const auto& a, const auto& b) {
                     return a.size() > b.size();
                   });

  std::vector<Rational> exponents;
  PairCover current = cover;
  exponents.push_back(cover_exponent(current, k));
  for (const auto& part : schedule) {
    if (part.size() == 2) continue;  // already a pair, expansion is a no-op
    const auto it =
        std::find(current.parts.begin(), current.parts.end(), part);
    if (it == current.parts.end()) continue;  // merged away by an earlier step
    current = expand_part(
        current, static_cast<std::size_t>(it - current.parts.begin()));
    exponents.push_back(cover_exponent(current, k));
  }
  return exponents;
}

double expected_trace_collections(int n, int s, int k, double p,
                                  const PairCover& cover) {
  if (static_cast<int>(cover.base.size()) != k)
    throw std::invalid_argument("expected_trace_collections: base size != k");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("expected_trace_collections: bad p");
  if (n < k + s)
    throw std::invalid_argument("expected_trace_collections: need n >= k + s");
  long double product = 1.0L;
  for (const auto& part : cover.parts) {
    if (static_cast<int>(part.size()) > s)
      throw std::invalid_argument(
          "expected_trace_collections: part larger than the uniformity");
    // E must contain V_i and avoid the rest of S, so the remaining s - |V_i|
    // vertices come from the n - k outside S.
    product *= static_cast<long double>(p) *
               static_cast<long double>(
                   binomial_double(n - k, s - static_cast<int>(part.size())));
  }
  return static_cast<double>(product);
}

double expected_overlapping_pairs_bound(int n, int s, double p) {
  if (s < 2 || s > n)
    throw std::invalid_argument("expected_overlapping_pairs_bound: bad n, s");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("expected_overlapping_pairs_bound: bad p");
  return binomial_double(n, s) * binomial_double(s, 2) *
         binomial_double(n - 2, s - 2) * p * p;
}

double McStats::std_error() const {
  return trials > 0 ? stddev / std::sqrt(static_cast<double>(trials)) : 0.0;
}

namespace {

struct SumChunk {
  long double sum = 0.0L;
  long double sum_sq = 0.0L;
};

// Deterministic chunked Monte Carlo aggregation; per-trial values come from
// seed-derived independent streams, so worker count never matters.
template <typename TrialFn>
McStats run_mc(std::uint64_t trials, std::uint64_t seed, int threads,
               TrialFn trial) {
  constexpr std::uint64_t kChunk = 64;
  auto chunks = map_chunks<SumChunk>(
      trials, kChunk, threads, [&](std::uint64_t begin, std::uint64_t end) {
        SumChunk acc;
        for (std::uint64_t i = begin; i < end; ++i) {
          const long double value =
              static_cast<long double>(trial(derive_seed(seed, i)));
          acc.sum += value;
          acc.sum_sq += value * value;
        }
        return acc;
      });
  SumChunk total;
  for (const auto& c : chunks) {
    total.sum += c.sum;
    total.sum_sq += c.sum_sq;
  }
  McStats stats;
  stats.trials = trials;
  if (trials == 0) return stats;
  const long double mean = total.sum / static_cast<long double>(trials);
  stats.mean = static_cast<double>(mean);
  if (trials > 1) {
    const long double var =
        (total.sum_sq - static_cast<long double>(trials) * mean * mean) /
        static_cast<long double>(trials - 1);
    stats.stddev = static_cast<double>(std::sqrt(std::max(var, 0.0L)));
  }
  return stats;
}

}  // namespace

McStats mc_trace_collections(const PairCover& cover, int n, int s, double p,
                             std::uint64_t trials, std::uint64_t seed,
                             int threads) {
  if (!is_pair_cover(cover.parts, cover.base))
    throw std::invalid_argument("mc_trace_collections: invalid pair-cover");
  if (cover.base.empty() || cover.base.front() < 0 || cover.base.back() >= n)
    throw std::invalid_argument("mc_trace_collections: base not within 0..n-1");
  return run_mc(trials, seed, threads, [&](std::uint64_t trial_seed) {
    const Hypergraph h = sample_hypergraph({n, s, p, trial_seed});
    // Count hyperedges tracing each part exactly; collections multiply.
    long double product = 1.0L;
    for (const auto& part : cover.parts) {
      std::uint64_t pool = 0;
      for (const auto& e : h.edges()) {
        std::vector<int> inter;
        std::set_intersection(e.begin(), e.end(), cover.base.begin(),
                              cover.base.end(), std::back_inserter(inter));
        if (inter == part) ++pool;
      }
      product *= static_cast<long double>(pool);
      if (product == 0.0L) break;
    }
    return static_cast<double>(product);
  });
}

McStats mc_overlapping_pairs(int n, int s, double p, std::uint64_t trials,
                             std::uint64_t seed, int threads) {
  return run_mc(trials, seed, threads, [&](std::uint64_t trial_seed) {
    const Hypergraph h = sample_hypergraph({n, s, p, trial_seed});
    return static_cast<double>(overlapping_pair_count(h));
  });
}

namespace {

// Kuhn's augmenting-path matching from pattern edges to hyperedges.
bool kuhn_match(const std::vector<std::vector<int>>& candidates) {
  const std::size_t m = candidates.size();
  std::size_t max_edge = 0;
  for (const auto& c : candidates)
    for (int e : c) max_edge = std::max(max_edge, static_cast<std::size_t>(e) + 1);
  std::vector<int> matched_to(max_edge, -1);
  std::vector<char> visited;

  std::function<bool(std::size_t)> try_augment = [&](std::size_t i) -> bool {
    for (int e : candidates[i]) {
      if (visited[e]) continue;
      visited[e] = 1;
      if (matched_to[e] < 0 ||
          try_augment(static_cast<std::size_t>(matched_to[e]))) {
        matched_to[e] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };

  for (std::size_t i = 0; i < m; ++i) {
    visited.assign(max_edge, 0);
    if (!try_augment(i)) return false;
  }
  return true;
}

}  // namespace

bool pattern_embeds(const SubgraphPattern& pattern, const Hypergraph& h) {
  if (pattern.vertex_count() > h.vertex_count())
    throw std::invalid_argument("pattern_embeds: pattern vertices exceed V(H)");
  const auto pattern_edges = pattern.edges();
  if (pattern_edges.empty()) return true;
  std::vector<std::vector<int>> candidates(pattern_edges.size());
  for (std::size_t i = 0; i < pattern_edges.size(); ++i) {
    const auto [u, v] = pattern_edges[i];
    for (std::size_t j = 0; j < h.edge_count(); ++j) {
      const auto& e = h.edge(j);
      if (std::binary_search(e.begin(), e.end(), u) &&
          std::binary_search(e.begin(), e.end(), v))
        candidates[i].push_back(static_cast<int>(j));
    }
    if (candidates[i].empty()) return false;
  }
  return kuhn_match(candidates);
}

McBoundReport mc_pattern_embedding(const SubgraphPattern& pattern, int n,
                                   int s, double p, std::uint64_t trials,
                                   std::uint64_t seed, int threads) {
  if (trials < 1)
    throw std::invalid_argument("mc_pattern_embedding: need trials >= 1");
  if (pattern.vertex_count() > n)
    throw std::invalid_argument("mc_pattern_embedding: pattern exceeds 0..n-1");
  const McStats stats =
      run_mc(trials, seed, threads, [&](std::uint64_t trial_seed) {
        const Hypergraph h = sample_hypergraph({n, s, p, trial_seed});
        return pattern_embeds(pattern, h) ? 1.0 : 0.0;
      });
  McBoundReport report;
  report.trials = trials;
  report.frequency = stats.mean;
  report.bound =
      std::pow(p * binomial_double(n - 2, s - 2), pattern.edge_count());
  report.sigma = std::sqrt(stats.mean * (1.0 - stats.mean) /
                           static_cast<double>(trials));
  return report;
}

}  // namespace ramsey
