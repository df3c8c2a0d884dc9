#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ramsey/rational.hpp"

namespace ramsey {

using uint128 = unsigned __int128;

// C(n, k) in 128-bit arithmetic; nullopt on overflow. Returns 0 for k > n.
std::optional<uint128> binomial_u128(int n, int k);

// C(n, k) as a double (exact until ~2^53, then best-effort).
double binomial_double(int n, int k);

// C(n, k) capped: overflow or values above `cap` report failure via nullopt.
std::optional<std::uint64_t> binomial_capped(int n, int k, std::uint64_t cap);

// Maximum 2-density of the complete graph K_t: (C(t,2)-1)/(t-2) for t >= 3.
// For t = 2 the value 1/2 is used so that the exponent 2-s-1/m2(K_2)
// collapses to -s. Throws std::invalid_argument for t < 2.
Rational m2_clique(int t);

// Lexicographic enumeration of k-subsets of {0..n-1}.
// Advances `subset` to its successor; returns false after the last subset.
bool next_combination(std::vector<int>& subset, int n);

// The subset at position `rank` (0-based) in lexicographic order.
std::vector<int> unrank_combination(int n, int k, uint128 rank);

}  // namespace ramsey
