#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/conformal.hpp"
#include "ramsey/sampler.hpp"

namespace ramsey {

struct ConstructOptions {
  int n = 0;
  int s = 0;
  int k = 0;
  // Exactly one of p / expected_edges must be set.
  std::optional<double> p;
  std::optional<double> expected_edges;
  std::uint64_t seed = 0;
  int threads = 1;
  std::uint64_t budget = kDefaultEnumerationBudget;
  // Critical colouring file; without it the built-in colouring for k is used.
  std::optional<std::filesystem::path> colouring_file;
  std::optional<std::uint64_t> bijection_seed;
  std::filesystem::path out_dir;
};

struct ArrowCheck {
  int a = 0;
  int b = 0;
  std::string decision;
  bool complete = false;

  bool operator==(const ArrowCheck&) const = default;
};

// Provenance record of one construction run. Serialization carries no
// execution details (thread count, timing), so reports are reproducible
// byte for byte from the seed.
struct ConstructionReport {
  int n = 0;
  int s = 0;
  int k = 0;
  double p = 0.0;
  std::optional<double> expected_edges;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::string sampler_method;  // "exact" or "sparse"
  std::optional<std::uint64_t> bijection_seed;
  std::string colouring_source;  // "builtin" or "file"

  int red_clique_size = 0;
  int blue_clique_size = 0;

  double p_range_lower = 0.0;
  double p_range_upper = 0.0;
  bool p_within_range = false;

  std::uint64_t sampled_edges = 0;
  PruneReport prune;
  std::vector<int> conformal_sizes;

  int primal_n = 0;
  int primal_m = 0;
  std::vector<std::uint64_t> clique_counts;  // sizes 1..s

  std::uint64_t mono_red = 0;
  std::uint64_t mono_blue = 0;
  bool contains_Ks = false;
  std::optional<ArrowCheck> arrow_check;

  std::vector<std::string> warnings;

  bool certificate_clean() const { return mono_red == 0 && mono_blue == 0; }

  std::string to_json() const;
  static ConstructionReport from_json(const std::string& text);
};

// Runs sample -> prune -> primal -> colour -> verify and writes the artifact
// files (hypergraph.json, pruned.json, graph.txt, colouring.json,
// base_colouring.json, report.json) into opts.out_dir.
ConstructionReport run_construction(const ConstructOptions& opts);

struct VerificationCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct VerificationResult {
  std::vector<VerificationCheck> checks;
  bool all_ok() const;
};

// Recomputes every certificate figure of a construction run from the files
// on disk: the sample is redrawn from the recorded seed, the prune replayed,
// and all counts re-derived with the independent checkers.
VerificationResult verify_artifacts(const std::filesystem::path& dir,
                                    int threads = 1);

}  // namespace ramsey
