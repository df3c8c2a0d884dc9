#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

// s-uniform hypergraph on vertices 0..n-1. Hyperedges are stored sorted
// ascending, the list sorted lexicographically, with no duplicates, so two
// hypergraphs are equal exactly when their edge lists are equal.
class Hypergraph {
 public:
  // Canonicalizes `edges` and validates every invariant.
  Hypergraph(int n, int s, std::vector<std::vector<int>> edges);

  int vertex_count() const { return n_; }
  int uniformity() const { return s_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::vector<int>>& edges() const { return edges_; }
  const std::vector<int>& edge(std::size_t i) const { return edges_[i]; }

  // Subhypergraph keeping the edges at the given (sorted) positions.
  Hypergraph restricted_to(const std::vector<std::size_t>& keep) const;

  bool operator==(const Hypergraph& o) const {
    return n_ == o.n_ && s_ == o.s_ && edges_ == o.edges_;
  }

 private:
  int n_;
  int s_;
  std::vector<std::vector<int>> edges_;
};

// Graph on the same vertex set joining every pair that appears together in
// some hyperedge.
Graph primal_graph(const Hypergraph& h);

struct LinearityResult {
  bool linear = true;
  // One offending pair of hyperedges (sharing >= 2 vertices) when not linear.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> witness;
};

// A hypergraph is linear when every two hyperedges share at most one vertex.
LinearityResult check_linear(const Hypergraph& h);
bool is_linear(const Hypergraph& h);

// Number of unordered hyperedge pairs sharing at least two vertices.
std::uint64_t overlapping_pair_count(const Hypergraph& h);

// JSON format: {"n": int, "s": int, "edges": [[int, ...], ...]}.
// Canonical ordering is enforced on load; duplicates are rejected.
void save_hypergraph(const Hypergraph& h, const std::filesystem::path& path);
Hypergraph load_hypergraph(const std::filesystem::path& path);
std::string hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const std::string& text);

}  // namespace ramsey
