#include "ramsey/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ramsey/arrowing.hpp"
#include "ramsey/colouring.hpp"
#include "ramsey/combinatorics.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

namespace {

using nlohmann::json;

json report_to_json_object(const ConstructionReport& r) {
  json config;
  config["n"] = r.n;
  config["s"] = r.s;
  config["k"] = r.k;
  config["p"] = r.p;
  if (r.expected_edges)
    config["expected_edges"] = *r.expected_edges;
  else
    config["expected_edges"] = nullptr;
  config["seed"] = r.seed;
  config["budget"] = r.budget;
  config["sampler_method"] = r.sampler_method;
  if (r.bijection_seed)
    config["bijection_seed"] = *r.bijection_seed;
  else
    config["bijection_seed"] = nullptr;
  config["colouring_source"] = r.colouring_source;

  json prune;
  prune["removed_for_linearity"] = r.prune.removed_for_linearity;
  prune["removed_for_conformality"] = r.prune.removed_for_conformality;
  prune["surviving"] = r.prune.surviving;
  prune["conformal_sizes"] = r.conformal_sizes;

  json primal;
  primal["n"] = r.primal_n;
  primal["m"] = r.primal_m;
  primal["clique_counts"] = r.clique_counts;

  json certificate;
  certificate["mono_red_Kk"] = r.mono_red;
  certificate["mono_blue_Kk"] = r.mono_blue;
  certificate["red_clique_size"] = r.red_clique_size;
  certificate["blue_clique_size"] = r.blue_clique_size;
  certificate["contains_Ks"] = r.contains_Ks;

  json range;
  range["lower"] = r.p_range_lower;
  range["upper"] = r.p_range_upper;
  range["p_within_range"] = r.p_within_range;

  json out;
  out["config"] = config;
  out["p_range"] = range;
  out["sampled_edges"] = r.sampled_edges;
  out["prune"] = prune;
  out["primal"] = primal;
  out["certificate"] = certificate;
  if (r.arrow_check) {
    json arrow;
    arrow["a"] = r.arrow_check->a;
    arrow["b"] = r.arrow_check->b;
    arrow["decision"] = r.arrow_check->decision;
    arrow["complete"] = r.arrow_check->complete;
    out["arrow_check"] = arrow;
  } else {
    out["arrow_check"] = nullptr;
  }
  out["warnings"] = r.warnings;
  return out;
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

std::string ConstructionReport::to_json() const {
  return report_to_json_object(*this).dump(2) + "\n";
}

ConstructionReport ConstructionReport::from_json(const std::string& text) {
  const json j = json::parse(text);
  ConstructionReport r;
  const auto& config = j.at("config");
  r.n = config.at("n").get<int>();
  r.s = config.at("s").get<int>();
  r.k = config.at("k").get<int>();
  r.p = config.at("p").get<double>();
  if (!config.at("expected_edges").is_null())
    r.expected_edges = config.at("expected_edges").get<double>();
  r.seed = config.at("seed").get<std::uint64_t>();
  r.budget = config.at("budget").get<std::uint64_t>();
  r.sampler_method = config.at("sampler_method").get<std::string>();
  if (!config.at("bijection_seed").is_null())
    r.bijection_seed = config.at("bijection_seed").get<std::uint64_t>();
  r.colouring_source = config.at("colouring_source").get<std::string>();

  const auto& range = j.at("p_range");
  r.p_range_lower = range.at("lower").get<double>();
  r.p_range_upper = range.at("upper").get<double>();
  r.p_within_range = range.at("p_within_range").get<bool>();

  r.sampled_edges = j.at("sampled_edges").get<std::uint64_t>();

  const auto& prune = j.at("prune");
  r.prune.removed_for_linearity =
      prune.at("removed_for_linearity").get<std::vector<std::vector<int>>>();
  r.prune.removed_for_conformality =
      prune.at("removed_for_conformality").get<std::vector<std::vector<int>>>();
  r.prune.surviving = prune.at("surviving").get<std::uint64_t>();
  r.conformal_sizes = prune.at("conformal_sizes").get<std::vector<int>>();

  const auto& primal = j.at("primal");
  r.primal_n = primal.at("n").get<int>();
  r.primal_m = primal.at("m").get<int>();
  r.clique_counts = primal.at("clique_counts").get<std::vector<std::uint64_t>>();

  const auto& certificate = j.at("certificate");
  r.mono_red = certificate.at("mono_red_Kk").get<std::uint64_t>();
  r.mono_blue = certificate.at("mono_blue_Kk").get<std::uint64_t>();
  r.red_clique_size = certificate.at("red_clique_size").get<int>();
  r.blue_clique_size = certificate.at("blue_clique_size").get<int>();
  r.contains_Ks = certificate.at("contains_Ks").get<bool>();

  if (!j.at("arrow_check").is_null()) {
    const auto& arrow = j.at("arrow_check");
    ArrowCheck check;
    check.a = arrow.at("a").get<int>();
    check.b = arrow.at("b").get<int>();
    check.decision = arrow.at("decision").get<std::string>();
    check.complete = arrow.at("complete").get<bool>();
    r.arrow_check = check;
  }
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  return r;
}

namespace {

std::vector<int> conformality_sizes(int k, int red_k, int blue_k, int s,
                                    std::vector<std::string>& warnings) {
  std::vector<int> sizes{k, red_k, blue_k};
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  std::vector<int> usable;
  for (int size : sizes) {
    if (size < 3) continue;  // 2-conformality holds for every primal graph
    if (size > s) {
      warnings.push_back("conformality for clique size " +
                         std::to_string(size) +
                         " exceeds the uniformity and cannot be enforced");
      continue;
    }
    usable.push_back(size);
  }
  return usable;
}

}  // namespace

ConstructionReport run_construction(const ConstructOptions& opts) {
  if (opts.k < 3) throw std::invalid_argument("construct: need k >= 3");
  if (opts.s < opts.k) throw std::invalid_argument("construct: need s >= k");
  if (opts.p.has_value() == opts.expected_edges.has_value())
    throw std::invalid_argument(
        "construct: exactly one of p / expected_edges must be given");

  const CriticalColouring base = opts.colouring_file
                                     ? load_critical(*opts.colouring_file)
                                     : builtin_critical(opts.k);
  if (base.order != opts.s)
    throw std::invalid_argument(
        "construct: s must equal the base colouring order (" +
        std::to_string(base.order) + ")");

  ConstructionReport report;
  report.n = opts.n;
  report.s = opts.s;
  report.k = opts.k;
  report.expected_edges = opts.expected_edges;
  report.p = opts.p ? *opts.p
                    : p_for_expected_edges(opts.n, opts.s, *opts.expected_edges);
  report.seed = opts.seed;
  report.budget = opts.budget;
  report.bijection_seed = opts.bijection_seed;
  report.colouring_source = opts.colouring_file ? "file" : "builtin";
  report.red_clique_size = base.red_k;
  report.blue_clique_size = base.blue_k;

  const ProbabilityRange range = p_range(opts.n, opts.s, opts.k);
  report.p_range_lower = range.lower;
  report.p_range_upper = range.upper;
  report.p_within_range = range.lower < report.p && report.p < range.upper;
  if (!report.p_within_range)
    report.warnings.push_back(
        "p lies outside the asymptotic window (lower, upper); the run is a "
        "desk-scale instance, not a regime witness");

  SampleConfig cfg{opts.n, opts.s, report.p, opts.seed, opts.budget};
  const bool exact = binomial_capped(opts.n, opts.s, opts.budget).has_value();
  report.sampler_method = exact ? "exact" : "sparse";
  const Hypergraph sampled = exact ? sample_hypergraph(cfg, opts.threads)
                                   : sample_hypergraph_sparse(cfg);
  report.sampled_edges = sampled.edge_count();

  report.conformal_sizes = conformality_sizes(opts.k, base.red_k, base.blue_k,
                                              opts.s, report.warnings);
  auto [pruned, prune_report] =
      prune_to_conformal(sampled, std::span<const int>(report.conformal_sizes));
  report.prune = std::move(prune_report);
  if (report.prune.surviving == 0)
    report.warnings.push_back(
        "vacuous instance: no hyperedges survived pruning");

  const Graph primal = primal_graph(pruned);
  report.primal_n = primal.vertex_count();
  report.primal_m = primal.edge_count();
  const auto counts = clique_counts_up_to(primal, opts.s, opts.threads);
  report.clique_counts.assign(counts.begin() + 1, counts.end());

  const EdgeColouring witness =
      build_witness_colouring(pruned, base, opts.bijection_seed);
  report.mono_red =
      count_monochromatic(primal, witness, base.red_k, Colour::Red, opts.threads);
  report.mono_blue = count_monochromatic(primal, witness, base.blue_k,
                                         Colour::Blue, opts.threads);
  report.contains_Ks = contains_clique(primal, opts.s);

  // The arrowing direction is decidable at this scale only for a blue target
  // of K_2, where it reduces to the K_s containment just computed.
  if (base.blue_k == 3) {
    const ArrowResult arrow = decide_arrowing(primal, opts.s, 2);
    report.arrow_check =
        ArrowCheck{opts.s, 2, arrow_decision_name(*arrow.decision),
                   arrow.complete};
  }

  std::filesystem::create_directories(opts.out_dir);
  save_hypergraph(sampled, opts.out_dir / "hypergraph.json");
  save_hypergraph(pruned, opts.out_dir / "pruned.json");
  save_graph(primal, opts.out_dir / "graph.txt");
  save_colouring(witness, opts.out_dir / "colouring.json");
  save_critical(base, opts.out_dir / "base_colouring.json");
  write_file(opts.out_dir / "report.json", report.to_json());
  return report;
}

bool VerificationResult::all_ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerificationCheck& c) { return c.ok; });
}

VerificationResult verify_artifacts(const std::filesystem::path& dir,
                                    int threads) {
  VerificationResult result;
  auto add = [&](std::string name, bool ok, std::string detail = "") {
    result.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  const ConstructionReport report =
      ConstructionReport::from_json(read_file(dir / "report.json"));
  const Hypergraph sampled = load_hypergraph(dir / "hypergraph.json");
  const Hypergraph pruned = load_hypergraph(dir / "pruned.json");
  const Graph graph = load_graph(dir / "graph.txt");
  const EdgeColouring colouring = load_colouring(dir / "colouring.json");
  // Re-validates zero monochromatic cliques on load.
  const CriticalColouring base = load_critical(dir / "base_colouring.json");

  add("base colouring valid", true,
      "red_k=" + std::to_string(base.red_k) +
          " blue_k=" + std::to_string(base.blue_k));

  SampleConfig cfg{report.n, report.s, report.p, report.seed, report.budget};
  const Hypergraph resampled = report.sampler_method == "exact"
                                   ? sample_hypergraph(cfg, threads)
                                   : sample_hypergraph_sparse(cfg);
  add("sample reproducible from seed", resampled == sampled);
  add("sampled edge count matches report",
      sampled.edge_count() == report.sampled_edges);

  auto [repruned, reprune_report] = prune_to_conformal(
      sampled, std::span<const int>(report.conformal_sizes));
  add("prune reproducible", repruned == pruned && reprune_report == report.prune);
  add("pruned hypergraph linear", is_linear(pruned));
  bool conformal = true;
  for (int size : report.conformal_sizes)
    conformal = conformal &&
                enumerate_noncovered_cliques(pruned, size, threads).empty();
  add("pruned hypergraph conformal", conformal);

  add("graph is the primal graph", primal_graph(pruned) == graph);
  add("primal stats match report",
      graph.vertex_count() == report.primal_n &&
          graph.edge_count() == report.primal_m);
  const auto counts = clique_counts_up_to(graph, report.s, threads);
  add("clique counts match report",
      std::vector<std::uint64_t>(counts.begin() + 1, counts.end()) ==
          report.clique_counts);

  const EdgeColouring rebuilt =
      build_witness_colouring(pruned, base, report.bijection_seed);
  add("colouring reproducible", rebuilt == colouring);
  add("colouring total on graph", colouring.total_on(graph));

  const std::uint64_t mono_red = count_monochromatic(
      graph, colouring, report.red_clique_size, Colour::Red, threads);
  const std::uint64_t mono_blue = count_monochromatic(
      graph, colouring, report.blue_clique_size, Colour::Blue, threads);
  add("monochromatic counts match report",
      mono_red == report.mono_red && mono_blue == report.mono_blue,
      "red=" + std::to_string(mono_red) + " blue=" + std::to_string(mono_blue));
  add("certificate clean", mono_red == 0 && mono_blue == 0);

  add("K_s containment matches report",
      contains_clique(graph, report.s) == report.contains_Ks);

  if (report.arrow_check) {
    const ArrowResult arrow =
        decide_arrowing(graph, report.arrow_check->a, report.arrow_check->b);
    add("arrow check matches report",
        arrow.decision &&
            arrow_decision_name(*arrow.decision) ==
                report.arrow_check->decision &&
            arrow.complete == report.arrow_check->complete);
  }
  return result;
}

}  // namespace ramsey
