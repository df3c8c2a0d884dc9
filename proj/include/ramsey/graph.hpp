#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

// Simple undirected graph on vertices 0..n-1 with dense bit-matrix
// adjacency. No self-loops, no parallel edges; adjacency is symmetric.
// Instances are treated as immutable once built and are safe to share
// across threads.
class Graph {
 public:
  explicit Graph(int n);

  static Graph complete(int n);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  int words_per_row() const { return words_; }

  bool has_edge(int u, int v) const {
    check_pair(u, v);
    return (adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
            (v & 63)) & 1;
  }

  // Returns false if the edge was already present.
  bool add_edge(int u, int v);
  // Returns false if the edge was absent.
  bool remove_edge(int u, int v);

  // Adjacency row of v as 64-bit words.
  std::span<const std::uint64_t> row(int v) const {
    return {adj_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }

  int degree(int v) const;

  // All edges {u, v} with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && adj_ == o.adj_;
  }

 private:
  void check_pair(int u, int v) const;

  int n_;
  int m_ = 0;
  int words_;
  std::vector<std::uint64_t> adj_;
};

// All t-cliques of G, each sorted ascending, list lexicographic.
// t = 1 yields all vertices, t = 2 all edges, t > n the empty list.
// Enumeration may be partitioned by leading vertex across threads; the
// result is identical to the sequential run.
std::vector<std::vector<int>> cliques_of_size(const Graph& g, int t,
                                              int threads = 1);

// Number of t-cliques without materializing them.
std::uint64_t count_cliques_of_size(const Graph& g, int t, int threads = 1);

// counts[t] = number of t-cliques, for t in 1..t_max (index 0 unused).
std::vector<std::uint64_t> clique_counts_up_to(const Graph& g, int t_max,
                                               int threads = 1);

bool contains_clique(const Graph& g, int t);

// Vertex order from repeated minimum-degree removal; used to schedule
// backtracking searches so clique conflicts surface early.
std::vector<int> degeneracy_order(const Graph& g);

// Text format: first line "n m", then m lines "u v" in canonical order.
void save_graph(const Graph& g, const std::filesystem::path& path);
Graph load_graph(const std::filesystem::path& path);
std::string graph_to_string(const Graph& g);
Graph graph_from_string(const std::string& text);

}  // namespace ramsey
