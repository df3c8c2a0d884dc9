#include "ramsey/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "ramsey/combinatorics.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/hash_rng.hpp"
#include "ramsey/parallel.hpp"

namespace ramsey {

namespace {

void validate(const SampleConfig& cfg) {
  if (cfg.s < 2 || cfg.s > cfg.n)
    throw std::invalid_argument("sample: need 2 <= s <= n");
  if (!(cfg.p >= 0.0 && cfg.p <= 1.0))
    throw std::invalid_argument("sample: need 0 <= p <= 1");
}

constexpr std::uint64_t kSparseCountStream = 0x5eed0001ULL;
constexpr std::uint64_t kSparseIndexStream = 0x5eed0002ULL;

// Binomial(n_trials, p) by inverse transform; exact pmf recurrence in long
// double. Fine for means up to ~1e4, which the caller enforces.
std::uint64_t binomial_draw(long double n_trials, double p, CounterRng& rng) {
  if (p <= 0.0) return 0;
  if (p >= 1.0) return static_cast<std::uint64_t>(n_trials);
  const long double u = static_cast<long double>(rng.next_unit());
  const long double q_ratio =
      static_cast<long double>(p) / (1.0L - static_cast<long double>(p));
  long double pmf = std::exp(n_trials * std::log1p(-static_cast<long double>(p)));
  long double cdf = pmf;
  std::uint64_t j = 0;
  while (cdf < u) {
    pmf *= (n_trials - static_cast<long double>(j)) /
           (static_cast<long double>(j) + 1.0L) * q_ratio;
    cdf += pmf;
    ++j;
    if (pmf <= 0.0L && cdf < u) break;  // tail exhausted numerically
  }
  return j;
}

}  // namespace

Hypergraph sample_hypergraph(const SampleConfig& cfg, int threads) {
  validate(cfg);
  const auto candidates = binomial_capped(cfg.n, cfg.s, cfg.budget);
  if (!candidates)
    throw BudgetExceededError(
        "sample: C(n, s) exceeds the enumeration budget; raise the budget or "
        "use the sparse sampler");
  if (cfg.p == 0.0) return Hypergraph(cfg.n, cfg.s, {});

  const std::uint64_t total = *candidates;
  constexpr std::uint64_t kChunk = 1 << 16;
  auto blocks = map_chunks<std::vector<std::vector<int>>>(
      total, kChunk, threads, [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<std::vector<int>> kept;
        std::vector<int> subset =
            unrank_combination(cfg.n, cfg.s, static_cast<uint128>(begin));
        for (std::uint64_t idx = begin; idx < end; ++idx) {
          if (unit_double(hash_subset(cfg.seed, subset)) < cfg.p)
            kept.push_back(subset);
          if (idx + 1 < end) next_combination(subset, cfg.n);
        }
        return kept;
      });

  std::vector<std::vector<int>> edges;
  for (auto& b : blocks)
    edges.insert(edges.end(), std::make_move_iterator(b.begin()),
                 std::make_move_iterator(b.end()));
  return Hypergraph(cfg.n, cfg.s, std::move(edges));
}

Hypergraph sample_hypergraph_sparse(const SampleConfig& cfg) {
  validate(cfg);
  const auto candidates = binomial_u128(cfg.n, cfg.s);
  if (!candidates || *candidates >= (uint128{1} << 63))
    throw BudgetExceededError("sparse sample: C(n, s) >= 2^63");
  const std::uint64_t total = static_cast<std::uint64_t>(*candidates);
  const long double mean = static_cast<long double>(total) * cfg.p;
  if (mean > 1e5L)
    throw BudgetExceededError("sparse sample: expected edge count above 1e5");

  CounterRng count_rng(derive_seed(cfg.seed, kSparseCountStream));
  const std::uint64_t count =
      binomial_draw(static_cast<long double>(total), cfg.p, count_rng);

  CounterRng index_rng(derive_seed(cfg.seed, kSparseIndexStream));
  std::set<std::uint64_t> picked;
  while (picked.size() < count) picked.insert(index_rng.next_below(total));

  std::vector<std::vector<int>> edges;
  edges.reserve(picked.size());
  for (std::uint64_t idx : picked)
    edges.push_back(unrank_combination(cfg.n, cfg.s, static_cast<uint128>(idx)));
  return Hypergraph(cfg.n, cfg.s, std::move(edges));
}

ProbabilityRange p_range(int n, int s, int k) {
  if (k < 3) throw std::invalid_argument("p_range: need k >= 3");
  if (s < k) throw std::invalid_argument("p_range: need s >= k");
  if (n < 2) throw std::invalid_argument("p_range: need n >= 2");
  const double lower_exp =
      2.0 - s - m2_clique(k - 1).reciprocal().to_double();
  const double upper_exp = 2.0 - s - m2_clique(k).reciprocal().to_double();
  return {std::pow(n, lower_exp), std::pow(n, upper_exp)};
}

double p_for_expected_edges(int n, int s, double m) {
  if (m < 0) throw std::invalid_argument("p_for_expected_edges: need m >= 0");
  if (s < 2 || s > n)
    throw std::invalid_argument("p_for_expected_edges: need 2 <= s <= n");
  return std::min(1.0, m / binomial_double(n, s));
}

}  // namespace ramsey
