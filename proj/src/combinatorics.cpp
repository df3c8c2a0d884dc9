#include "ramsey/combinatorics.hpp"

#include <stdexcept>

namespace ramsey {

std::optional<uint128> binomial_u128(int n, int k) {
  if (n < 0 || k < 0) return uint128{0};
  if (k > n) return uint128{0};
  if (k > n - k) k = n - k;
  constexpr uint128 kMax = ~uint128{0};
  uint128 result = 1;
  for (int i = 1; i <= k; ++i) {
    const uint128 factor = static_cast<uint128>(n - k + i);
    if (result > kMax / factor) return std::nullopt;
    result = result * factor / static_cast<uint128>(i);
  }
  return result;
}

double binomial_double(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double result = 1.0;
  for (int i = 1; i <= k; ++i) {
    result *= static_cast<double>(n - k + i);
    result /= static_cast<double>(i);
  }
  return result;
}

std::optional<std::uint64_t> binomial_capped(int n, int k, std::uint64_t cap) {
  const auto b = binomial_u128(n, k);
  if (!b || *b > static_cast<uint128>(cap)) return std::nullopt;
  return static_cast<std::uint64_t>(*b);
}

Rational m2_clique(int t) {
  if (t < 2) throw std::invalid_argument("m2_clique: t must be >= 2");
  if (t == 2) return Rational(1, 2);
  const std::int64_t pairs = static_cast<std::int64_t>(t) * (t - 1) / 2;
  return Rational(pairs - 1, t - 2);
}

bool next_combination(std::vector<int>& subset, int n) {
  const int k = static_cast<int>(subset.size());
  int i = k - 1;
  while (i >= 0 && subset[i] == n - k + i) --i;
  if (i < 0) return false;
  ++subset[i];
  for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  return true;
}

std::vector<int> unrank_combination(int n, int k, uint128 rank) {
  std::vector<int> result(k);
  int v = 0;
  for (int pos = 0; pos < k; ++pos) {
    while (true) {
      const auto below = binomial_u128(n - 1 - v, k - pos - 1);
      if (!below) throw std::overflow_error("unrank_combination: overflow");
      if (rank < *below) break;
      rank -= *below;
      ++v;
      if (v >= n) throw std::out_of_range("unrank_combination: rank too large");
    }
    result[pos] = v++;
  }
  return result;
}

}  // namespace ramsey
