#include "ramsey/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ramsey/parallel.hpp"

namespace ramsey {

namespace {

int popcount_words(std::span<const std::uint64_t> words) {
  int c = 0;
  for (std::uint64_t w : words) c += std::popcount(w);
  return c;
}

}  // namespace

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

void Graph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("Graph: vertex out of range");
  if (u == v) throw std::invalid_argument("Graph: self-loop");
}

bool Graph::add_edge(int u, int v) {
  check_pair(u, v);
  if (has_edge(u, v)) return false;
  adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ULL << (v & 63);
  adj_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ULL << (u & 63);
  ++m_;
  return true;
}

bool Graph::remove_edge(int u, int v) {
  check_pair(u, v);
  if (!has_edge(u, v)) return false;
  adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(1ULL << (v & 63));
  adj_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(1ULL << (u & 63));
  --m_;
  return true;
}

int Graph::degree(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
  return popcount_words(row(v));
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> result;
  result.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    const auto r = row(u);
    for (int w = u >> 6; w < words_; ++w) {
      std::uint64_t bits = r[w];
      if (w == (u >> 6)) {
        const int shift = (u & 63) + 1;
        bits = shift >= 64 ? 0 : bits & (~0ULL << shift);  // keep v > u
      }
      while (bits) {
        const int v = (w << 6) + std::countr_zero(bits);
        bits &= bits - 1;
        result.emplace_back(u, v);
      }
    }
  }
  return result;
}

namespace {

// DFS over cliques, extending by ascending vertices. Each node at depth d is
// a distinct d-clique.
class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, int target, int depth_cap)
      : g_(g),
        words_(g.words_per_row()),
        target_(target),
        depth_cap_(depth_cap) {}

  // Visit cliques whose smallest vertex is v0.
  template <typename Visit>
  void run_from(int v0, Visit&& visit) {
    chosen_.assign(1, v0);
    cand_.assign(static_cast<std::size_t>(depth_cap_) * words_, 0);
    const auto r = g_.row(v0);
    for (int w = 0; w < words_; ++w) cand_[w] = r[w];
    mask_above(cand_.data(), v0);
    dfs(1, visit);
  }

  bool stopped = false;

 private:
  void mask_above(std::uint64_t* words, int v) {
    const int w = v >> 6;
    for (int i = 0; i < w; ++i) words[i] = 0;
    words[w] &= ~0ULL << (v & 63);
    words[w] &= ~(1ULL << (v & 63));
  }

  template <typename Visit>
  void dfs(int depth, Visit&& visit) {
    if (stopped) return;
    if (!visit(chosen_, depth)) {
      stopped = true;
      return;
    }
    if (depth >= depth_cap_) return;
    const std::uint64_t* cand = cand_.data() +
                                static_cast<std::size_t>(depth - 1) * words_;
    if (target_ > 0) {
      int pc = 0;
      for (int w = 0; w < words_; ++w) pc += std::popcount(cand[w]);
      if (depth + pc < target_) return;
    }
    std::uint64_t* next = cand_.data() + static_cast<std::size_t>(depth) * words_;
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = cand[w];
      while (bits) {
        const int v = (w << 6) + std::countr_zero(bits);
        bits &= bits - 1;
        const auto r = g_.row(v);
        for (int i = 0; i < words_; ++i) next[i] = cand[i] & r[i];
        mask_above(next, v);
        chosen_.push_back(v);
        dfs(depth + 1, visit);
        chosen_.pop_back();
        if (stopped) return;
      }
    }
  }

  const Graph& g_;
  int words_;
  int target_;     // exact size wanted, 0 = all sizes up to the cap
  int depth_cap_;  // maximum clique size to descend to
  std::vector<int> chosen_;
  std::vector<std::uint64_t> cand_;
};

}  // namespace

std::vector<std::vector<int>> cliques_of_size(const Graph& g, int t,
                                              int threads) {
  if (t < 1) throw std::invalid_argument("cliques_of_size: t must be >= 1");
  const int n = g.vertex_count();
  if (t > n) return {};
  auto blocks = map_chunks<std::vector<std::vector<int>>>(
      static_cast<std::uint64_t>(n), 1, threads,
      [&](std::uint64_t begin, std::uint64_t) {
        std::vector<std::vector<int>> local;
        CliqueSearch search(g, t, t);
        search.run_from(static_cast<int>(begin),
                        [&](const std::vector<int>& clique, int depth) {
                          if (depth == t) local.push_back(clique);
                          return true;
                        });
        return local;
      });
  std::vector<std::vector<int>> result;
  for (auto& b : blocks)
    result.insert(result.end(), std::make_move_iterator(b.begin()),
                  std::make_move_iterator(b.end()));
  return result;
}

std::uint64_t count_cliques_of_size(const Graph& g, int t, int threads) {
  if (t < 1) throw std::invalid_argument("count_cliques_of_size: t must be >= 1");
  const int n = g.vertex_count();
  if (t > n) return 0;
  auto blocks = map_chunks<std::uint64_t>(
      static_cast<std::uint64_t>(n), 1, threads,
      [&](std::uint64_t begin, std::uint64_t) {
        std::uint64_t local = 0;
        CliqueSearch search(g, t, t);
        search.run_from(static_cast<int>(begin),
                        [&](const std::vector<int>&, int depth) {
                          if (depth == t) ++local;
                          return true;
                        });
        return local;
      });
  std::uint64_t total = 0;
  for (std::uint64_t b : blocks) total += b;
  return total;
}

std::vector<std::uint64_t> clique_counts_up_to(const Graph& g, int t_max,
                                               int threads) {
  if (t_max < 1) throw std::invalid_argument("clique_counts_up_to: t_max >= 1");
  const int n = g.vertex_count();
  const int cap = std::min(t_max, n);
  auto blocks = map_chunks<std::vector<std::uint64_t>>(
      static_cast<std::uint64_t>(n), 1, threads,
      [&](std::uint64_t begin, std::uint64_t) {
        std::vector<std::uint64_t> local(static_cast<std::size_t>(t_max) + 1, 0);
        if (cap < 1) return local;
        CliqueSearch search(g, 0, cap);
        search.run_from(static_cast<int>(begin),
                        [&](const std::vector<int>&, int depth) {
                          ++local[static_cast<std::size_t>(depth)];
                          return true;
                        });
        return local;
      });
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(t_max) + 1, 0);
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += b[i];
  return counts;
}

bool contains_clique(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("contains_clique: t must be >= 1");
  const int n = g.vertex_count();
  if (t > n) return false;
  for (int v0 = 0; v0 < n; ++v0) {
    bool found = false;
    CliqueSearch search(g, t, t);
    search.run_from(v0, [&](const std::vector<int>&, int depth) {
      if (depth == t) {
        found = true;
        return false;
      }
      return true;
    });
    if (found) return true;
  }
  return false;
}

std::vector<int> degeneracy_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(n), order;
  std::vector<char> removed(n, 0);
  order.reserve(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
    removed[best] = 1;
    order.push_back(best);
    const auto r = g.row(best);
    for (int w = 0; w < g.words_per_row(); ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        const int u = (w << 6) + std::countr_zero(bits);
        bits &= bits - 1;
        if (!removed[u]) --deg[u];
      }
    }
  }
  return order;
}

std::string graph_to_string(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph graph_from_string(const std::string& text) {
  std::istringstream is(text);
  int n = -1, m = -1;
  if (!(is >> n >> m)) throw std::invalid_argument("graph: bad header");
  if (n < 0 || m < 0) throw std::invalid_argument("graph: bad header");
  Graph g(n);
  for (int i = 0; i < m; ++i) {
    int u, v;
    if (!(is >> u >> v)) throw std::invalid_argument("graph: truncated edge list");
    if (!g.add_edge(u, v)) throw std::invalid_argument("graph: duplicate edge");
  }
  return g;
}

void save_graph(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << graph_to_string(g);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return graph_from_string(buf.str());
}

}  // namespace ramsey
