#include "ramsey/conformal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "ramsey/graph.hpp"

namespace ramsey {

namespace {

std::vector<int> sorted_unique(std::vector<int> v, const char* what) {
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    throw std::invalid_argument(std::string(what) + ": repeated vertex");
  return v;
}

}  // namespace

PairCover PairCover::make(std::vector<int> base,
                          std::vector<std::vector<int>> parts) {
  PairCover cover;
  cover.base = sorted_unique(std::move(base), "PairCover base");
  for (auto& part : parts) part = sorted_unique(std::move(part), "PairCover part");
  std::sort(parts.begin(), parts.end());
  cover.parts = std::move(parts);
  if (!is_pair_cover(cover.parts, cover.base))
    throw std::invalid_argument("PairCover: parts do not cover every pair");
  return cover;
}

bool PairCover::is_perfect() const {
  const std::size_t k = base.size();
  if (parts.size() != k * (k - 1) / 2) return false;
  return std::all_of(parts.begin(), parts.end(),
                     [](const auto& p) { return p.size() == 2; });
}

PairCover perfect_pair_cover(int k) {
  if (k < 3) throw std::invalid_argument("perfect_pair_cover: need k >= 3");
  std::vector<int> base(k);
  for (int i = 0; i < k; ++i) base[i] = i;
  std::vector<std::vector<int>> parts;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) parts.push_back({i, j});
  return PairCover::make(std::move(base), std::move(parts));
}

bool is_pair_cover(const std::vector<std::vector<int>>& parts,
                   const std::vector<int>& S) {
  const auto base = sorted_unique(S, "is_pair_cover base");
  const int k = static_cast<int>(base.size());
  auto position = [&](int v) {
    const auto it = std::lower_bound(base.begin(), base.end(), v);
    if (it == base.end() || *it != v) return -1;
    return static_cast<int>(it - base.begin());
  };

  std::set<std::vector<int>> seen;
  std::vector<char> covered(static_cast<std::size_t>(k) * k, 0);
  for (const auto& raw : parts) {
    const auto part = sorted_unique(raw, "is_pair_cover part");
    if (part.size() < 2)
      throw std::invalid_argument("is_pair_cover: part of size < 2");
    std::vector<int> idx;
    for (int v : part) {
      const int pos = position(v);
      if (pos < 0)
        throw std::invalid_argument("is_pair_cover: part not a subset of S");
      idx.push_back(pos);
    }
    if (!seen.insert(part).second)
      throw std::invalid_argument("is_pair_cover: repeated part");
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b)
        covered[static_cast<std::size_t>(idx[a]) * k + idx[b]] = 1;
  }
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (!covered[static_cast<std::size_t>(a) * k + b]) return false;
  return true;
}

std::vector<std::vector<int>> pair_trace(const Hypergraph& h,
                                         const std::vector<int>& S) {
  const auto base = sorted_unique(S, "pair_trace S");
  if (!base.empty() && (base.front() < 0 || base.back() >= h.vertex_count()))
    throw std::invalid_argument("pair_trace: S not a subset of V(H)");
  std::set<std::vector<int>> traces;
  for (const auto& e : h.edges()) {
    std::vector<int> inter;
    std::set_intersection(e.begin(), e.end(), base.begin(), base.end(),
                          std::back_inserter(inter));
    if (inter.size() >= 2) traces.insert(std::move(inter));
  }
  return {traces.begin(), traces.end()};
}

namespace {

// Incidence bitsets: for each vertex, the set of hyperedges containing it.
std::vector<std::vector<std::uint64_t>> incidence_bitsets(const Hypergraph& h) {
  const std::size_t words = (h.edge_count() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> inc(
      h.vertex_count(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < h.edge_count(); ++i)
    for (int v : h.edge(i)) inc[v][i >> 6] |= 1ULL << (i & 63);
  return inc;
}

bool covered_by_some_hyperedge(
    const std::vector<std::vector<std::uint64_t>>& inc,
    const std::vector<int>& clique) {
  const auto& first = inc[clique.front()];
  std::vector<std::uint64_t> acc(first);
  for (std::size_t i = 1; i < clique.size(); ++i) {
    const auto& next = inc[clique[i]];
    bool any = false;
    for (std::size_t w = 0; w < acc.size(); ++w) {
      acc[w] &= next[w];
      any |= acc[w] != 0;
    }
    if (!any) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<int>> enumerate_noncovered_cliques(const Hypergraph& h,
                                                           int k, int threads) {
  if (k < 3 || k > h.uniformity())
    throw std::invalid_argument("enumerate_noncovered_cliques: need 3 <= k <= s");
  const Graph g = primal_graph(h);
  const auto inc = incidence_bitsets(h);
  std::vector<std::vector<int>> result;
  for (auto& clique : cliques_of_size(g, k, threads))
    if (!covered_by_some_hyperedge(inc, clique))
      result.push_back(std::move(clique));
  return result;
}

namespace {

int shared_capped(const std::vector<int>& a, const std::vector<int>& b) {
  int count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j])
      ++i;
    else if (a[i] > b[j])
      ++j;
    else {
      if (++count >= 2) return count;
      ++i, ++j;
    }
  }
  return count;
}

class Pruner {
 public:
  explicit Pruner(const Hypergraph& h)
      : h_(h), alive_(h.edge_count(), 1), primal_(h.vertex_count()) {}

  void enforce_linearity(PruneReport& report) {
    const auto& edges = h_.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!alive_[i]) continue;
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        if (!alive_[j]) continue;
        if (shared_capped(edges[i], edges[j]) >= 2) {
          alive_[j] = 0;
          report.removed_for_linearity.push_back(edges[j]);
        }
      }
    }
    rebuild_primal();
  }

  // Requires a linear current state (each primal edge owned by exactly one
  // hyperedge). Removals keep linearity and never uncover other cliques, so
  // the uncovered set only shrinks and is maintained in place.
  void enforce_conformality(int k, PruneReport& report) {
    std::set<std::vector<int>> uncovered;
    for (auto& clique : cliques_of_size(primal_, k))
      if (!clique_covered(clique)) uncovered.insert(std::move(clique));

    while (!uncovered.empty()) {
      const std::vector<int> clique = *uncovered.begin();
      std::size_t victim = h_.edge_count();
      for (std::size_t a = 0; a < clique.size(); ++a)
        for (std::size_t b = a + 1; b < clique.size(); ++b) {
          const std::size_t owner = owner_of(clique[a], clique[b]);
          if (victim == h_.edge_count() || h_.edge(owner) < h_.edge(victim))
            victim = owner;
        }
      remove_edge(victim, uncovered);
      report.removed_for_conformality.push_back(h_.edge(victim));
    }
  }

  std::pair<Hypergraph, PruneReport> finish(PruneReport report) const {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < alive_.size(); ++i)
      if (alive_[i]) keep.push_back(i);
    report.surviving = keep.size();
    return {h_.restricted_to(keep), std::move(report)};
  }

 private:
  void rebuild_primal() {
    primal_ = Graph(h_.vertex_count());
    owners_.clear();
    for (std::size_t i = 0; i < h_.edge_count(); ++i) {
      if (!alive_[i]) continue;
      const auto& e = h_.edge(i);
      for (std::size_t a = 0; a < e.size(); ++a)
        for (std::size_t b = a + 1; b < e.size(); ++b) {
          primal_.add_edge(e[a], e[b]);
          owners_[pair_key(e[a], e[b])] = i;
        }
    }
  }

  std::uint64_t pair_key(int u, int v) const {
    if (u > v) std::swap(u, v);
    return static_cast<std::uint64_t>(u) * h_.vertex_count() + v;
  }

  std::size_t owner_of(int u, int v) const { return owners_.at(pair_key(u, v)); }

  bool clique_covered(const std::vector<int>& clique) const {
    const std::size_t first = owner_of(clique[0], clique[1]);
    for (std::size_t a = 0; a < clique.size(); ++a)
      for (std::size_t b = a + 1; b < clique.size(); ++b)
        if (owner_of(clique[a], clique[b]) != first) return false;
    return true;
  }

  void remove_edge(std::size_t idx, std::set<std::vector<int>>& uncovered) {
    alive_[idx] = 0;
    const auto& e = h_.edge(idx);
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        primal_.remove_edge(e[a], e[b]);
        owners_.erase(pair_key(e[a], e[b]));
      }
    for (auto it = uncovered.begin(); it != uncovered.end();) {
      if (shared_capped(*it, e) >= 2)
        it = uncovered.erase(it);
      else
        ++it;
    }
  }

  const Hypergraph& h_;
  std::vector<char> alive_;
  Graph primal_;
  std::map<std::uint64_t, std::size_t> owners_;
};

}  // namespace

std::pair<Hypergraph, PruneReport> prune_to_conformal(
    const Hypergraph& h, std::span<const int> clique_sizes) {
  std::vector<int> sizes(clique_sizes.begin(), clique_sizes.end());
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  for (int k : sizes)
    if (k < 3 || k > h.uniformity())
      throw std::invalid_argument("prune_to_conformal: need 3 <= k <= s");

  Pruner pruner(h);
  PruneReport report;
  pruner.enforce_linearity(report);
  for (int k : sizes) pruner.enforce_conformality(k, report);
  return pruner.finish(std::move(report));
}

std::pair<Hypergraph, PruneReport> prune_to_conformal(const Hypergraph& h,
                                                      int k) {
  const int sizes[] = {k};
  return prune_to_conformal(h, std::span<const int>(sizes));
}

std::string PruneReport::to_json() const {
  nlohmann::json j;
  j["removed_for_linearity"] = removed_for_linearity;
  j["removed_for_conformality"] = removed_for_conformality;
  j["surviving"] = surviving;
  return j.dump(2) + "\n";
}

PruneReport PruneReport::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  PruneReport r;
  r.removed_for_linearity =
      j.at("removed_for_linearity").get<std::vector<std::vector<int>>>();
  r.removed_for_conformality =
      j.at("removed_for_conformality").get<std::vector<std::vector<int>>>();
  r.surviving = j.at("surviving").get<std::uint64_t>();
  return r;
}

}  // namespace ramsey
