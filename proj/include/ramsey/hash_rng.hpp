#pragma once

#include <cstdint>
#include <span>

namespace ramsey {

// Counter-based pseudo-randomness. Every random decision in this project is
// a pure function of (seed, payload), so enumeration order and thread count
// never change the outcome.

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform double in [0, 1) with 53 random bits.
inline double unit_double(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Hash of a sorted vertex tuple under a given seed.
inline std::uint64_t hash_subset(std::uint64_t seed, std::span<const int> verts) {
  std::uint64_t h = splitmix64(seed);
  for (int v : verts) h = splitmix64(h ^ (static_cast<std::uint64_t>(v) + 1));
  return h;
}

// Independent child seed for stream `index` (Monte Carlo trials, shuffles).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ index);
}

// Sequential splitmix64 stream.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : state_(splitmix64(seed)) {}

  std::uint64_t next_u64() {
    state_ += kGolden;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  double next_unit() { return unit_double(next_u64()); }

  // Uniform value in [0, bound) by rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace ramsey
