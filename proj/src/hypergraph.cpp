#include "ramsey/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ramsey {

Hypergraph::Hypergraph(int n, int s, std::vector<std::vector<int>> edges)
    : n_(n), s_(s), edges_(std::move(edges)) {
  if (s_ < 2) throw std::invalid_argument("Hypergraph: uniformity must be >= 2");
  if (n_ < s_) throw std::invalid_argument("Hypergraph: need n >= s");
  for (auto& e : edges_) {
    if (static_cast<int>(e.size()) != s_)
      throw std::invalid_argument("Hypergraph: hyperedge of wrong size");
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw std::invalid_argument("Hypergraph: repeated vertex in hyperedge");
    if (e.front() < 0 || e.back() >= n_)
      throw std::invalid_argument("Hypergraph: vertex out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("Hypergraph: duplicate hyperedge");
}

Hypergraph Hypergraph::restricted_to(const std::vector<std::size_t>& keep) const {
  std::vector<std::vector<int>> kept;
  kept.reserve(keep.size());
  for (std::size_t i : keep) kept.push_back(edges_.at(i));
  return Hypergraph(n_, s_, std::move(kept));
}

Graph primal_graph(const Hypergraph& h) {
  Graph g(h.vertex_count());
  for (const auto& e : h.edges())
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) g.add_edge(e[i], e[j]);
  return g;
}

namespace {

// Sorted-merge intersection size with early exit at 2.
int shared_vertices_capped(const std::vector<int>& a, const std::vector<int>& b) {
  int count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (a[i] > b[j]) {
      ++j;
    } else {
      if (++count >= 2) return count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace

LinearityResult check_linear(const Hypergraph& h) {
  const auto& edges = h.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (shared_vertices_capped(edges[i], edges[j]) >= 2)
        return {false, std::make_pair(edges[i], edges[j])};
  return {true, std::nullopt};
}

bool is_linear(const Hypergraph& h) { return check_linear(h).linear; }

std::uint64_t overlapping_pair_count(const Hypergraph& h) {
  const auto& edges = h.edges();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (shared_vertices_capped(edges[i], edges[j]) >= 2) ++count;
  return count;
}

std::string hypergraph_to_json(const Hypergraph& h) {
  nlohmann::json j;
  j["n"] = h.vertex_count();
  j["s"] = h.uniformity();
  j["edges"] = h.edges();
  return j.dump(2) + "\n";
}

Hypergraph hypergraph_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  return Hypergraph(j.at("n").get<int>(), j.at("s").get<int>(),
                    j.at("edges").get<std::vector<std::vector<int>>>());
}

void save_hypergraph(const Hypergraph& h, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << hypergraph_to_json(h);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

Hypergraph load_hypergraph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return hypergraph_from_json(buf.str());
}

}  // namespace ramsey
