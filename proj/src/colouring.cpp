#include "ramsey/colouring.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ramsey/errors.hpp"
#include "ramsey/hash_rng.hpp"

namespace ramsey {

EdgeColouring::EdgeColouring(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("EdgeColouring: negative order");
  cells_.assign(static_cast<std::size_t>(n_) * n_, 0);
}

std::size_t EdgeColouring::cell(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
    throw std::invalid_argument("EdgeColouring: bad vertex pair");
  if (u > v) std::swap(u, v);
  return static_cast<std::size_t>(u) * n_ + v;
}

std::optional<Colour> EdgeColouring::colour(int u, int v) const {
  const std::uint8_t raw = cells_[cell(u, v)];
  if (raw == 0) return std::nullopt;
  return raw == 1 ? Colour::Red : Colour::Blue;
}

void EdgeColouring::set_colour(int u, int v, Colour c) {
  auto& slot = cells_[cell(u, v)];
  if (slot == 0) ++coloured_;
  slot = c == Colour::Red ? 1 : 2;
}

bool EdgeColouring::total_on(const Graph& g) const {
  if (g.vertex_count() != n_) return false;
  if (coloured_ != static_cast<std::size_t>(g.edge_count())) return false;
  for (const auto& [u, v] : g.edges())
    if (cells_[cell(u, v)] == 0) return false;
  return true;
}

std::vector<std::tuple<int, int, Colour>> EdgeColouring::entries() const {
  std::vector<std::tuple<int, int, Colour>> result;
  result.reserve(coloured_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v) {
      const std::uint8_t raw = cells_[static_cast<std::size_t>(u) * n_ + v];
      if (raw != 0)
        result.emplace_back(u, v, raw == 1 ? Colour::Red : Colour::Blue);
    }
  return result;
}

Graph EdgeColouring::monochromatic_subgraph(Colour c) const {
  Graph g(n_);
  const std::uint8_t want = c == Colour::Red ? 1 : 2;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (cells_[static_cast<std::size_t>(u) * n_ + v] == want) g.add_edge(u, v);
  return g;
}

std::uint64_t count_monochromatic(const Graph& g, const EdgeColouring& c,
                                  int t, Colour colour, int threads) {
  if (!c.total_on(g))
    throw std::invalid_argument("count_monochromatic: colouring not total on G");
  if (t < 2) throw std::invalid_argument("count_monochromatic: need t >= 2");
  return count_cliques_of_size(c.monochromatic_subgraph(colour), t, threads);
}

namespace {

// One monochromatic t-clique of the given colour, if any.
std::optional<std::vector<int>> find_monochromatic(const EdgeColouring& c,
                                                   int t, Colour colour) {
  const Graph mono = c.monochromatic_subgraph(colour);
  auto cliques = cliques_of_size(mono, t);
  if (cliques.empty()) return std::nullopt;
  return cliques.front();
}

}  // namespace

CriticalColouring make_critical(int order, int red_k, int blue_k,
                                EdgeColouring colouring) {
  if (red_k < 2 || blue_k < 2)
    throw std::invalid_argument("make_critical: clique sizes must be >= 2");
  if (!colouring.total_on(Graph::complete(order)))
    throw std::invalid_argument("make_critical: colouring not total on K_order");
  if (auto red = find_monochromatic(colouring, red_k, Colour::Red)) {
    throw ColouringValidationError("critical colouring has a red clique", *red,
                                   "R");
  }
  if (auto blue = find_monochromatic(colouring, blue_k, Colour::Blue)) {
    throw ColouringValidationError("critical colouring has a blue clique",
                                   *blue, "B");
  }
  return CriticalColouring{order, red_k, blue_k, std::move(colouring)};
}

CriticalColouring builtin_critical(int k) {
  if (k == 3) {
    EdgeColouring c(5);
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v) c.set_colour(u, v, Colour::Blue);
    for (int i = 0; i < 5; ++i) c.set_colour(i, (i + 1) % 5, Colour::Red);
    return make_critical(5, 3, 3, std::move(c));
  }
  if (k == 4) {
    // Nonzero quadratic residues mod 17.
    static constexpr int kResidues[] = {1, 2, 4, 8, 9, 13, 15, 16};
    EdgeColouring c(17);
    for (int u = 0; u < 17; ++u)
      for (int v = u + 1; v < 17; ++v) {
        const int d = (v - u) % 17;
        const bool red = std::find(std::begin(kResidues), std::end(kResidues),
                                   d) != std::end(kResidues);
        c.set_colour(u, v, red ? Colour::Red : Colour::Blue);
      }
    return make_critical(17, 4, 4, std::move(c));
  }
  throw UnsupportedError(
      "builtin_critical: only k in {3, 4} is built in; supply a colouring "
      "file for other parameters");
}

namespace {

nlohmann::json colouring_entries_json(const EdgeColouring& c) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v, col] : c.entries())
    edges.push_back({u, v, colour_name(col)});
  return edges;
}

EdgeColouring colouring_from_parsed(const nlohmann::json& j) {
  EdgeColouring c(j.at("n").get<int>());
  for (const auto& entry : j.at("edges")) {
    if (!entry.is_array() || entry.size() != 3)
      throw std::invalid_argument("colouring: malformed edge entry");
    const int u = entry[0].get<int>();
    const int v = entry[1].get<int>();
    const std::string name = entry[2].get<std::string>();
    if (name != "R" && name != "B")
      throw std::invalid_argument("colouring: colour must be \"R\" or \"B\"");
    if (c.colour(u, v))
      throw std::invalid_argument("colouring: duplicate edge entry");
    c.set_colour(u, v, name == "R" ? Colour::Red : Colour::Blue);
  }
  return c;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace

std::string colouring_to_json(const EdgeColouring& c) {
  nlohmann::json j;
  j["n"] = c.vertex_count();
  j["edges"] = colouring_entries_json(c);
  return j.dump(2) + "\n";
}

EdgeColouring colouring_from_json(const std::string& text) {
  return colouring_from_parsed(nlohmann::json::parse(text));
}

void save_colouring(const EdgeColouring& c, const std::filesystem::path& path) {
  write_file(path, colouring_to_json(c));
}

EdgeColouring load_colouring(const std::filesystem::path& path) {
  return colouring_from_json(read_file(path));
}

std::string critical_to_json(const CriticalColouring& c) {
  nlohmann::json j;
  j["n"] = c.order;
  j["red_k"] = c.red_k;
  j["blue_k"] = c.blue_k;
  j["edges"] = colouring_entries_json(c.colouring);
  return j.dump(2) + "\n";
}

CriticalColouring critical_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  EdgeColouring c = colouring_from_parsed(j);
  return make_critical(j.at("n").get<int>(), j.at("red_k").get<int>(),
                       j.at("blue_k").get<int>(), std::move(c));
}

void save_critical(const CriticalColouring& c, const std::filesystem::path& path) {
  write_file(path, critical_to_json(c));
}

CriticalColouring load_critical(const std::filesystem::path& path) {
  return critical_from_json(read_file(path));
}

EdgeColouring build_witness_colouring(const Hypergraph& h0,
                                      const CriticalColouring& base,
                                      std::optional<std::uint64_t> bijection_seed) {
  if (base.order != h0.uniformity())
    throw std::invalid_argument(
        "build_witness_colouring: base colouring order must equal the "
        "hypergraph uniformity");
  if (const auto lin = check_linear(h0); !lin.linear)
    throw IllDefinedColouringError(
        "build_witness_colouring: hypergraph is not linear, an edge would "
        "receive two colours",
        lin.witness->first, lin.witness->second);

  const int s = h0.uniformity();
  EdgeColouring result(h0.vertex_count());
  std::vector<int> pos(s);
  for (const auto& e : h0.edges()) {
    std::iota(pos.begin(), pos.end(), 0);
    if (bijection_seed) {
      CounterRng rng(hash_subset(*bijection_seed, e));
      for (int i = s - 1; i > 0; --i)
        std::swap(pos[i], pos[rng.next_below(static_cast<std::uint64_t>(i) + 1)]);
    }
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j)
        result.set_colour(e[i], e[j], *base.colouring.colour(pos[i], pos[j]));
  }
  return result;
}

}  // namespace ramsey
