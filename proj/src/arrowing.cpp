#include "ramsey/arrowing.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ramsey {

bool verify_colouring(const Graph& g, const EdgeColouring& c, int a, int b) {
  if (a < 2 || b < 2)
    throw std::invalid_argument("verify_colouring: need a, b >= 2");
  if (!c.total_on(g))
    throw std::invalid_argument("verify_colouring: partial colouring");
  return count_monochromatic(g, c, a, Colour::Red) == 0 &&
         count_monochromatic(g, c, b, Colour::Blue) == 0;
}

namespace {

// Edges ordered so that the graph is built vertex by vertex along the
// degeneracy order; every clique inside an order prefix is complete before
// any later edge is touched.
std::vector<std::pair<int, int>> arrow_edge_order(const Graph& g) {
  const auto order = degeneracy_order(g);
  std::vector<int> rank(g.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  auto edges = g.edges();
  std::stable_sort(edges.begin(), edges.end(), [&](const auto& e, const auto& f) {
    const auto key = [&](const std::pair<int, int>& p) {
      return std::make_pair(std::max(rank[p.first], rank[p.second]),
                            std::min(rank[p.first], rank[p.second]));
    };
    return key(e) < key(f);
  });
  return edges;
}

class ArrowSearch {
 public:
  ArrowSearch(const Graph& g, int a, int b, std::uint64_t budget)
      : g_(g),
        a_(a),
        b_(b),
        budget_(budget),
        words_(g.words_per_row()),
        edges_(arrow_edge_order(g)),
        red_(static_cast<std::size_t>(g.vertex_count()) * words_, 0),
        blue_(static_cast<std::size_t>(g.vertex_count()) * words_, 0),
        assigned_(edges_.size(), Colour::Red) {}

  ArrowResult run() {
    ArrowResult result;
    const bool stopped = dfs(0);
    result.nodes_explored = nodes_;
    if (aborted_) {
      result.complete = false;
      return result;
    }
    result.complete = true;
    if (stopped) {
      result.decision = ArrowDecision::NotArrows;
      EdgeColouring witness(g_.vertex_count());
      for (std::size_t i = 0; i < edges_.size(); ++i)
        witness.set_colour(edges_[i].first, edges_[i].second, assigned_[i]);
      if (!verify_colouring(g_, witness, a_, b_))
        throw std::logic_error("arrowing: search produced an invalid witness");
      result.witness = std::move(witness);
    } else {
      result.decision = ArrowDecision::Arrows;
    }
    return result;
  }

 private:
  std::uint64_t* row(std::vector<std::uint64_t>& adj, int v) {
    return adj.data() + static_cast<std::size_t>(v) * words_;
  }

  void set_bit(std::vector<std::uint64_t>& adj, int u, int v) {
    row(adj, u)[v >> 6] |= 1ULL << (v & 63);
    row(adj, v)[u >> 6] |= 1ULL << (u & 63);
  }

  void clear_bit(std::vector<std::uint64_t>& adj, int u, int v) {
    row(adj, u)[v >> 6] &= ~(1ULL << (v & 63));
    row(adj, v)[u >> 6] &= ~(1ULL << (u & 63));
  }

  // Is there a t-clique within the candidate set at scratch depth `level`
  // in the one-colour graph `adj`?
  bool clique_within(const std::vector<std::uint64_t>& adj, int level, int t) {
    std::uint64_t* cand = scratch_.data() + static_cast<std::size_t>(level) * words_;
    if (t == 0) return true;
    int pc = 0;
    for (int w = 0; w < words_; ++w) pc += std::popcount(cand[w]);
    if (pc < t) return false;
    if (t == 1) return true;
    std::uint64_t* next = cand + words_;
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = cand[w];
      while (bits) {
        const int v = (w << 6) + std::countr_zero(bits);
        bits &= bits - 1;
        const std::uint64_t* r =
            adj.data() + static_cast<std::size_t>(v) * words_;
        for (int i = 0; i < words_; ++i) next[i] = cand[i] & r[i];
        // only vertices above v, to avoid revisiting subsets
        for (int i = 0; i < (v >> 6); ++i) next[i] = 0;
        next[v >> 6] &= (v & 63) == 63 ? 0 : ~0ULL << ((v & 63) + 1);
        if (clique_within(adj, level + 1, t - 1)) return true;
      }
    }
    return false;
  }

  // Would colouring {u, v} complete a monochromatic K_t in `adj`?
  bool completes_clique(std::vector<std::uint64_t>& adj, int u, int v, int t) {
    const std::size_t needed =
        static_cast<std::size_t>(t) * words_ + words_;
    if (scratch_.size() < needed) scratch_.assign(needed, 0);
    std::uint64_t* cand = scratch_.data();
    const std::uint64_t* ru = row(adj, u);
    const std::uint64_t* rv = row(adj, v);
    for (int i = 0; i < words_; ++i) cand[i] = ru[i] & rv[i];
    return clique_within(adj, 0, t - 2);
  }

  // Returns true when a witness was found (or the budget tripped).
  bool dfs(std::size_t idx) {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return true;
    }
    if (idx == edges_.size()) return true;
    const auto [u, v] = edges_[idx];
    if (!completes_clique(red_, u, v, a_)) {
      set_bit(red_, u, v);
      assigned_[idx] = Colour::Red;
      if (dfs(idx + 1)) return true;
      clear_bit(red_, u, v);
    }
    if (aborted_) return true;
    if (!completes_clique(blue_, u, v, b_)) {
      set_bit(blue_, u, v);
      assigned_[idx] = Colour::Blue;
      if (dfs(idx + 1)) return true;
      clear_bit(blue_, u, v);
    }
    return false;
  }

  const Graph& g_;
  int a_;
  int b_;
  std::uint64_t budget_;
  int words_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint64_t> red_;
  std::vector<std::uint64_t> blue_;
  std::vector<Colour> assigned_;
  std::vector<std::uint64_t> scratch_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

ArrowResult all_one_colour_result(const Graph& g, Colour colour) {
  ArrowResult result;
  result.decision = ArrowDecision::NotArrows;
  result.complete = true;
  EdgeColouring witness(g.vertex_count());
  for (const auto& [u, v] : g.edges()) witness.set_colour(u, v, colour);
  result.witness = std::move(witness);
  return result;
}

}  // namespace

ArrowResult decide_arrowing(const Graph& g, int a, int b, std::uint64_t budget) {
  if (a < 2 || b < 2)
    throw std::invalid_argument("decide_arrowing: need a, b >= 2");
  // A blue K_2 is just a blue edge: G -> (K_a, K_2) iff G contains K_a (the
  // all-red colouring is the only candidate witness). Symmetric for a = 2.
  if (b == 2) {
    if (contains_clique(g, a)) {
      ArrowResult result;
      result.decision = ArrowDecision::Arrows;
      result.complete = true;
      return result;
    }
    return all_one_colour_result(g, Colour::Red);
  }
  if (a == 2) {
    if (contains_clique(g, b)) {
      ArrowResult result;
      result.decision = ArrowDecision::Arrows;
      result.complete = true;
      return result;
    }
    return all_one_colour_result(g, Colour::Blue);
  }
  return ArrowSearch(g, a, b, budget).run();
}

CnfStats export_cnf(const Graph& g, int a, int b, std::ostream& out) {
  if (a < 3 || b < 3) throw std::invalid_argument("export_cnf: need a, b >= 3");
  const auto edges = g.edges();
  std::vector<std::vector<int>> clauses;

  const int n = g.vertex_count();
  std::vector<int> var(static_cast<std::size_t>(n) * n, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    var[static_cast<std::size_t>(edges[i].first) * n + edges[i].second] =
        static_cast<int>(i) + 1;
  }
  auto edge_var = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    return var[static_cast<std::size_t>(u) * n + v];
  };

  for (const auto& clique : cliques_of_size(g, a)) {
    std::vector<int> clause;
    for (std::size_t i = 0; i < clique.size(); ++i)
      for (std::size_t j = i + 1; j < clique.size(); ++j)
        clause.push_back(-edge_var(clique[i], clique[j]));
    clauses.push_back(std::move(clause));
  }
  for (const auto& clique : cliques_of_size(g, b)) {
    std::vector<int> clause;
    for (std::size_t i = 0; i < clique.size(); ++i)
      for (std::size_t j = i + 1; j < clique.size(); ++j)
        clause.push_back(edge_var(clique[i], clique[j]));
    clauses.push_back(std::move(clause));
  }

  out << "c red/blue edge colouring: variable i true = edge i red, edges in "
         "canonical order\n";
  out << "p cnf " << edges.size() << ' ' << clauses.size() << '\n';
  for (const auto& clause : clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  if (!out) throw std::runtime_error("export_cnf: write failed");
  return {edges.size(), clauses.size()};
}

CnfStats export_cnf(const Graph& g, int a, int b,
                    const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  return export_cnf(g, a, b, out);
}

EdgeColouring decode_model(const Graph& g, const std::string& solver_output) {
  const auto edges = g.edges();
  std::vector<int> assignment(edges.size() + 1, 0);  // 0 unset, +1 / -1
  std::istringstream is(solver_output);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == 'c' || line[0] == 's') continue;
    std::istringstream ls(line);
    std::string token;
    while (ls >> token) {
      if (token == "v" || token == "V") continue;
      int lit = 0;
      try {
        lit = std::stoi(token);
      } catch (const std::exception&) {
        throw std::invalid_argument("decode_model: unexpected token " + token);
      }
      if (lit == 0) continue;
      const std::size_t v = static_cast<std::size_t>(lit > 0 ? lit : -lit);
      if (v >= assignment.size()) continue;  // auxiliary variable
      const int sign = lit > 0 ? 1 : -1;
      if (assignment[v] != 0 && assignment[v] != sign)
        throw std::invalid_argument("decode_model: contradictory literals");
      assignment[v] = sign;
    }
  }
  EdgeColouring result(g.vertex_count());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (assignment[i + 1] == 0)
      throw std::invalid_argument("decode_model: edge variable unassigned");
    result.set_colour(edges[i].first, edges[i].second,
                      assignment[i + 1] > 0 ? Colour::Red : Colour::Blue);
  }
  return result;
}

}  // namespace ramsey
