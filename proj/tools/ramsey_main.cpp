// Command-line front end: constructs and verifies graphs that admit a
// colouring with no monochromatic K_k yet arrow (K_s, K_{k-1}).

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramsey/analysis.hpp"
#include "ramsey/arrowing.hpp"
#include "ramsey/colouring.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/pipeline.hpp"
#include "ramsey/sampler.hpp"

namespace {

using nlohmann::json;

constexpr int kExitClean = 0;
constexpr int kExitCertificateViolated = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitInvalidInput = 3;

struct CommonFlags {
  int threads = 1;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--threads", flags.threads, "worker threads")
      ->check(CLI::Range(1, 256));
  cmd->add_option("--format", flags.format, "stdout format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
}

void emit(const json& j, const CommonFlags& flags) {
  if (flags.format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : j.items())
    std::cout << key << ": " << value.dump() << "\n";
}

json arrow_result_json(const ramsey::ArrowResult& r) {
  json j;
  j["decision"] =
      r.decision ? json(ramsey::arrow_decision_name(*r.decision)) : json();
  j["complete"] = r.complete;
  j["nodes_explored"] = r.nodes_explored;
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{
      "Random-hypergraph constructions of graphs G with a K_k-free colouring "
      "that still arrow (K_s, K_{k-1}), with verification oracles"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand(
      "construct", "run sample -> prune -> colour -> verify and write artifacts");
  ramsey::ConstructOptions opts;
  CommonFlags construct_flags;
  std::optional<double> opt_p, opt_m;
  std::optional<std::uint64_t> opt_bijection;
  std::string colouring_file, out_dir;
  construct->add_option("--n", opts.n, "vertex count")->required();
  construct->add_option("--s", opts.s, "hyperedge size")->required();
  construct->add_option("--k", opts.k, "forbidden monochromatic clique size")
      ->required();
  construct->add_option("--p", opt_p, "hyperedge probability");
  construct->add_option("--expected-edges", opt_m, "expected hyperedge count");
  construct->add_option("--seed", opts.seed, "random seed")->required();
  construct->add_option("--budget", opts.budget, "candidate enumeration cap");
  construct->add_option("--colouring", colouring_file,
                        "critical colouring file (otherwise built-in)");
  construct->add_option("--bijection-seed", opt_bijection,
                        "seeded per-hyperedge position permutation");
  construct->add_option("--out", out_dir, "artifact directory")->required();
  add_common(construct, construct_flags);

  // sample
  auto* sample = app.add_subcommand("sample", "draw a random hypergraph");
  CommonFlags sample_flags;
  int sample_n = 0, sample_s = 0;
  std::optional<double> sample_p, sample_m;
  std::uint64_t sample_seed = 0, sample_budget = ramsey::kDefaultEnumerationBudget;
  bool sample_sparse = false;
  std::string sample_out, sample_config;
  sample->add_option("--n", sample_n, "vertex count");
  sample->add_option("--s", sample_s, "hyperedge size");
  sample->add_option("--p", sample_p, "hyperedge probability");
  sample->add_option("--expected-edges", sample_m, "expected hyperedge count");
  sample->add_option("--seed", sample_seed, "random seed");
  sample->add_option("--budget", sample_budget, "candidate enumeration cap");
  sample->add_flag("--sparse", sample_sparse,
                   "binomial-count sampler for huge candidate spaces");
  sample->add_option("--config", sample_config,
                     "JSON config {n, s, p|expected_edges, seed}");
  sample->add_option("--out", sample_out, "output file (stdout otherwise)");
  add_common(sample, sample_flags);

  // prune
  auto* prune = app.add_subcommand(
      "prune", "remove hyperedges until linear and k-conformal");
  CommonFlags prune_flags;
  std::string prune_in, prune_out;
  int prune_k = 0;
  prune->add_option("--in", prune_in, "hypergraph JSON file")->required();
  prune->add_option("--k", prune_k, "clique size to make conformal")->required();
  prune->add_option("--out", prune_out, "output directory")->required();
  add_common(prune, prune_flags);

  // arrow
  auto* arrow = app.add_subcommand(
      "arrow", "decide G -> (K_a, K_b) by exhaustive backtracking");
  CommonFlags arrow_flags;
  std::string arrow_graph, arrow_witness_out;
  int arrow_a = 0, arrow_b = 0;
  std::uint64_t arrow_budget = ramsey::kDefaultArrowBudget;
  arrow->add_option("--graph", arrow_graph, "graph file")->required();
  arrow->add_option("--a", arrow_a, "red clique size")->required();
  arrow->add_option("--b", arrow_b, "blue clique size")->required();
  arrow->add_option("--budget", arrow_budget, "search node budget");
  arrow->add_option("--witness-out", arrow_witness_out,
                    "write the non-arrowing colouring here");
  add_common(arrow, arrow_flags);

  // cnf
  auto* cnf = app.add_subcommand(
      "cnf", "export DIMACS CNF satisfiable iff G does not arrow (K_a, K_b)");
  CommonFlags cnf_flags;
  std::string cnf_graph, cnf_out;
  int cnf_a = 0, cnf_b = 0;
  cnf->add_option("--graph", cnf_graph, "graph file")->required();
  cnf->add_option("--a", cnf_a, "red clique size")->required();
  cnf->add_option("--b", cnf_b, "blue clique size")->required();
  cnf->add_option("--out", cnf_out, "output CNF file")->required();
  add_common(cnf, cnf_flags);

  // verify
  auto* verify = app.add_subcommand(
      "verify", "recompute every certificate figure from artifact files");
  CommonFlags verify_flags;
  std::string verify_dir;
  verify->add_option("--dir", verify_dir, "artifact directory")->required();
  add_common(verify, verify_flags);

  // cover-exponent
  auto* exponent = app.add_subcommand(
      "cover-exponent",
      "enumerate non-trivial pair-covers of a k-set and minimise the exponent");
  CommonFlags exponent_flags;
  int exponent_k = 0;
  exponent->add_option("--k", exponent_k, "base set size (3 or 4)")->required();
  add_common(exponent, exponent_flags);

  // mc
  auto* mc = app.add_subcommand("mc", "Monte Carlo oracles for the expectation "
                                      "and embedding bounds");
  CommonFlags mc_flags;
  std::string mc_what, mc_pattern = "edge";
  int mc_n = 0, mc_s = 0, mc_k = 3;
  double mc_p = 0.0;
  std::uint64_t mc_trials = 1000, mc_seed = 0;
  mc->add_option("--what", mc_what, "embedding | trace-collections | overlaps")
      ->required()
      ->check(CLI::IsMember({"embedding", "trace-collections", "overlaps"}));
  mc->add_option("--pattern", mc_pattern, "edge | path2 | triangle")
      ->check(CLI::IsMember({"edge", "path2", "triangle"}));
  mc->add_option("--n", mc_n, "vertex count")->required();
  mc->add_option("--s", mc_s, "hyperedge size")->required();
  mc->add_option("--p", mc_p, "hyperedge probability")->required();
  mc->add_option("--k", mc_k, "pair-cover base size (trace-collections)");
  mc->add_option("--trials", mc_trials, "number of trials");
  mc->add_option("--seed", mc_seed, "random seed");
  add_common(mc, mc_flags);

  CLI11_PARSE(app, argc, argv);

  if (construct->parsed()) {
    opts.p = opt_p;
    opts.expected_edges = opt_m;
    opts.bijection_seed = opt_bijection;
    if (!colouring_file.empty()) opts.colouring_file = colouring_file;
    opts.out_dir = out_dir;
    opts.threads = construct_flags.threads;
    const ramsey::ConstructionReport report = ramsey::run_construction(opts);
    emit(json::parse(report.to_json()), construct_flags);
    return report.certificate_clean() ? kExitClean : kExitCertificateViolated;
  }

  if (sample->parsed()) {
    ramsey::SampleConfig cfg;
    if (!sample_config.empty()) {
      std::ifstream in(sample_config);
      if (!in) throw std::runtime_error("cannot open " + sample_config);
      const json j = json::parse(in);
      cfg.n = j.at("n").get<int>();
      cfg.s = j.at("s").get<int>();
      cfg.seed = j.value("seed", std::uint64_t{0});
      if (j.contains("p"))
        cfg.p = j.at("p").get<double>();
      else
        cfg.p = ramsey::p_for_expected_edges(
            cfg.n, cfg.s, j.at("expected_edges").get<double>());
    } else {
      cfg.n = sample_n;
      cfg.s = sample_s;
      cfg.seed = sample_seed;
      if (sample_p.has_value() == sample_m.has_value())
        throw std::invalid_argument(
            "sample: exactly one of --p / --expected-edges is required");
      cfg.p = sample_p ? *sample_p
                       : ramsey::p_for_expected_edges(sample_n, sample_s,
                                                      *sample_m);
    }
    cfg.budget = sample_budget;
    const ramsey::Hypergraph h =
        sample_sparse ? ramsey::sample_hypergraph_sparse(cfg)
                      : ramsey::sample_hypergraph(cfg, sample_flags.threads);
    if (sample_out.empty()) {
      std::cout << ramsey::hypergraph_to_json(h);
    } else {
      ramsey::save_hypergraph(h, sample_out);
      json summary;
      summary["edges"] = h.edge_count();
      summary["out"] = sample_out;
      emit(summary, sample_flags);
    }
    return kExitClean;
  }

  if (prune->parsed()) {
    const ramsey::Hypergraph h = ramsey::load_hypergraph(prune_in);
    const auto [pruned, report] = ramsey::prune_to_conformal(h, prune_k);
    std::filesystem::create_directories(prune_out);
    ramsey::save_hypergraph(pruned,
                            std::filesystem::path(prune_out) / "pruned.json");
    std::ofstream rep(std::filesystem::path(prune_out) / "prune_report.json");
    rep << report.to_json();
    emit(json::parse(report.to_json()), prune_flags);
    return kExitClean;
  }

  if (arrow->parsed()) {
    const ramsey::Graph g = ramsey::load_graph(arrow_graph);
    const ramsey::ArrowResult result =
        ramsey::decide_arrowing(g, arrow_a, arrow_b, arrow_budget);
    emit(arrow_result_json(result), arrow_flags);
    if (!result.decision) return kExitInconclusive;
    if (result.witness && !arrow_witness_out.empty())
      ramsey::save_colouring(*result.witness, arrow_witness_out);
    return kExitClean;
  }

  if (cnf->parsed()) {
    const ramsey::Graph g = ramsey::load_graph(cnf_graph);
    const ramsey::CnfStats stats = ramsey::export_cnf(g, cnf_a, cnf_b, cnf_out);
    json j;
    j["variables"] = stats.variables;
    j["clauses"] = stats.clauses;
    j["out"] = cnf_out;
    emit(j, cnf_flags);
    return kExitClean;
  }

  if (verify->parsed()) {
    const ramsey::VerificationResult result =
        ramsey::verify_artifacts(verify_dir, verify_flags.threads);
    json checks = json::array();
    for (const auto& check : result.checks) {
      json c;
      c["check"] = check.name;
      c["ok"] = check.ok;
      if (!check.detail.empty()) c["detail"] = check.detail;
      checks.push_back(c);
      if (verify_flags.format == "text")
        std::cout << (check.ok ? "[ ok ] " : "[FAIL] ") << check.name
                  << (check.detail.empty() ? "" : "  (" + check.detail + ")")
                  << "\n";
    }
    if (verify_flags.format == "json") {
      json j;
      j["checks"] = checks;
      j["all_ok"] = result.all_ok();
      std::cout << j.dump(2) << "\n";
    }
    return result.all_ok() ? kExitClean : kExitCertificateViolated;
  }

  if (exponent->parsed()) {
    const ramsey::MinCoverExponentResult result =
        ramsey::min_cover_exponent_bruteforce(exponent_k);
    json j;
    j["k"] = exponent_k;
    j["min_exponent"] = result.min_exponent.str();
    j["min_exponent_value"] = result.min_exponent.to_double();
    j["covers_enumerated"] = result.covers_enumerated;
    j["argmin_count"] = result.argmin_count;
    j["argmin_parts"] = result.argmin.parts;
    emit(j, exponent_flags);
    return kExitClean;
  }

  if (mc->parsed()) {
    json j;
    if (mc_what == "embedding") {
      ramsey::Graph pattern(mc_n);
      if (mc_pattern == "edge") {
        pattern.add_edge(0, 1);
      } else if (mc_pattern == "path2") {
        pattern.add_edge(0, 1);
        pattern.add_edge(1, 2);
      } else {
        pattern.add_edge(0, 1);
        pattern.add_edge(1, 2);
        pattern.add_edge(0, 2);
      }
      const ramsey::McBoundReport report = ramsey::mc_pattern_embedding(
          pattern, mc_n, mc_s, mc_p, mc_trials, mc_seed, mc_flags.threads);
      j["pattern"] = mc_pattern;
      j["frequency"] = report.frequency;
      j["bound"] = report.bound;
      j["trials"] = report.trials;
      j["sigma"] = report.sigma;
    } else if (mc_what == "trace-collections") {
      const ramsey::PairCover cover = ramsey::perfect_pair_cover(mc_k);
      const ramsey::McStats stats = ramsey::mc_trace_collections(
          cover, mc_n, mc_s, mc_p, mc_trials, mc_seed, mc_flags.threads);
      j["expected"] =
          ramsey::expected_trace_collections(mc_n, mc_s, mc_k, mc_p, cover);
      j["mean"] = stats.mean;
      j["trials"] = stats.trials;
      j["sigma"] = stats.std_error();
    } else {
      const ramsey::McStats stats = ramsey::mc_overlapping_pairs(
          mc_n, mc_s, mc_p, mc_trials, mc_seed, mc_flags.threads);
      j["bound"] = ramsey::expected_overlapping_pairs_bound(mc_n, mc_s, mc_p);
      j["mean"] = stats.mean;
      j["trials"] = stats.trials;
      j["sigma"] = stats.std_error();
    }
    emit(j, mc_flags);
    return kExitClean;
  }

  return kExitInvalidInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ramsey::BudgetExceededError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const ramsey::ColouringValidationError& e) {
    std::cerr << "invalid input: " << e.what() << " witness=[";
    for (std::size_t i = 0; i < e.witness_clique().size(); ++i)
      std::cerr << (i ? "," : "") << e.witness_clique()[i];
    std::cerr << "] colour=" << e.colour_name() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}
