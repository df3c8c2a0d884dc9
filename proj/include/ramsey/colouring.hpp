#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/hypergraph.hpp"

namespace ramsey {

enum class Colour : std::uint8_t { Red, Blue };

inline const char* colour_name(Colour c) {
  return c == Colour::Red ? "R" : "B";
}

// Partial red/blue assignment on vertex pairs of an n-vertex graph. Totality
// relative to a concrete edge set is checked by total_on().
class EdgeColouring {
 public:
  explicit EdgeColouring(int n);

  int vertex_count() const { return n_; }
  std::size_t coloured_edges() const { return coloured_; }

  std::optional<Colour> colour(int u, int v) const;
  void set_colour(int u, int v, Colour c);

  // Every edge of g coloured and nothing outside E(g) coloured.
  bool total_on(const Graph& g) const;

  // Canonical (u, v, colour) triples, u < v, lexicographic.
  std::vector<std::tuple<int, int, Colour>> entries() const;

  // Subgraph formed by the edges of the given colour.
  Graph monochromatic_subgraph(Colour c) const;

  bool operator==(const EdgeColouring& o) const {
    return n_ == o.n_ && cells_ == o.cells_;
  }

 private:
  std::size_t cell(int u, int v) const;

  int n_;
  std::size_t coloured_ = 0;
  std::vector<std::uint8_t> cells_;  // 0 = unset, 1 = red, 2 = blue
};

// Total colouring of K_order with no red K_red_k and no blue K_blue_k,
// validated on construction.
struct CriticalColouring {
  int order = 0;
  int red_k = 0;
  int blue_k = 0;
  EdgeColouring colouring;
};

// Validates and assembles a critical colouring; throws
// ColouringValidationError with a witness clique when a monochromatic
// K_red_k / K_blue_k exists, std::invalid_argument when not total on K_order.
CriticalColouring make_critical(int order, int red_k, int blue_k,
                                EdgeColouring colouring);

// k = 3: K_5 with a red 5-cycle 01,12,23,34,40 and blue complement.
// k = 4: K_17 with edge {u,v} red iff (u-v) is a nonzero quadratic residue
// mod 17, i.e. in {1,2,4,8,9,13,15,16}. Throws UnsupportedError otherwise
// (no built-in exists for k >= 5; supply a colouring file instead).
CriticalColouring builtin_critical(int k);

// JSON colouring files: {"n":…, "edges":[[u,v,"R"|"B"],…]}; critical files
// additionally carry "red_k" and "blue_k".
std::string colouring_to_json(const EdgeColouring& c);
EdgeColouring colouring_from_json(const std::string& text);
void save_colouring(const EdgeColouring& c, const std::filesystem::path& path);
EdgeColouring load_colouring(const std::filesystem::path& path);

std::string critical_to_json(const CriticalColouring& c);
CriticalColouring critical_from_json(const std::string& text);
void save_critical(const CriticalColouring& c, const std::filesystem::path& path);
CriticalColouring load_critical(const std::filesystem::path& path);

// Tiles the base colouring over every hyperedge of a linear hypergraph: the
// pair {e_i, e_j} of hyperedge E (vertices sorted) receives the base colour
// of {i, j}. Requires base.order == s; throws IllDefinedColouringError when
// h0 is not linear. With bijection_seed set, each hyperedge uses a seeded
// random position permutation instead of the sorted-order identity.
EdgeColouring build_witness_colouring(
    const Hypergraph& h0, const CriticalColouring& base,
    std::optional<std::uint64_t> bijection_seed = std::nullopt);

// Number of t-cliques of g entirely in the given colour. Requires c total on
// E(g).
std::uint64_t count_monochromatic(const Graph& g, const EdgeColouring& c,
                                  int t, Colour colour, int threads = 1);

}  // namespace ramsey
