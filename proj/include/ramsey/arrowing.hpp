#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "ramsey/colouring.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

enum class ArrowDecision { Arrows, NotArrows };

inline const char* arrow_decision_name(ArrowDecision d) {
  return d == ArrowDecision::Arrows ? "Arrows" : "NotArrows";
}

struct ArrowResult {
  // Absent when the node budget ran out before the search finished.
  std::optional<ArrowDecision> decision;
  // Present iff NotArrows; verified free of red K_a and blue K_b.
  std::optional<EdgeColouring> witness;
  std::uint64_t nodes_explored = 0;
  // True iff the search space was exhausted or a witness was found.
  bool complete = false;
};

inline constexpr std::uint64_t kDefaultArrowBudget = 100'000'000ULL;

// Decides G -> (K_a, K_b): does every red/blue edge colouring of G contain a
// red K_a or a blue K_b? Exhaustive backtracking over edge colourings, edges
// ordered so both endpoints sit early in the degeneracy order; a clique is
// checked only when its last edge receives a colour. Arrows is only reported
// after exhausting the space. For b = 2 the answer short-circuits to
// contains_clique(G, a) (a blue edge is a blue K_2), symmetrically for a = 2.
// Sequential search returns the least witness with respect to the internal
// edge order with red before blue.
ArrowResult decide_arrowing(const Graph& g, int a, int b,
                            std::uint64_t budget = kDefaultArrowBudget);

// True iff c (total on E(G)) has no red K_a and no blue K_b.
bool verify_colouring(const Graph& g, const EdgeColouring& c, int a, int b);

struct CnfStats {
  std::uint64_t variables = 0;
  std::uint64_t clauses = 0;
};

// DIMACS CNF encoding, satisfiable iff G does not arrow (K_a, K_b).
// One variable per edge in canonical edge order (true = red); every a-clique
// contributes an all-negated clause, every b-clique an all-positive clause.
// Requires a, b >= 3.
CnfStats export_cnf(const Graph& g, int a, int b, std::ostream& out);
CnfStats export_cnf(const Graph& g, int a, int b,
                    const std::filesystem::path& path);

// Reads a satisfying assignment (signed DIMACS literals, 'c'/'s' lines
// ignored, 'v' prefixes accepted) back into an edge colouring of G.
// Every edge variable must be assigned.
EdgeColouring decode_model(const Graph& g, const std::string& solver_output);

}  // namespace ramsey
