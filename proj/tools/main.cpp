#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "degsq/clique.hpp"
#include "degsq/commands.hpp"
#include "degsq/graph.hpp"

namespace {

using degsq::cli::RunReport;

struct Output {
  std::string report_path;

  int finish(RunReport report) const {
    if (!report_path.empty()) {
      std::ofstream out(report_path);
      if (!out) {
        std::cerr << "error: cannot write " << report_path << "\n";
        return degsq::cli::kExitInput;
      }
      out << report.doc.dump(2) << "\n";
      if (report.doc.contains("results") && report.doc["results"].contains("all_ok"))
        std::cout << (report.doc["results"]["all_ok"].get<bool>() ? "ok" : "FAILED") << "\n";
    } else {
      std::cout << report.doc.dump(2) << "\n";
    }
    return report.exit_code;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"squares of 2-degenerate graphs: tight constructions, exact clique and density, "
               "token-based clique-support extraction and its multigraph diagnostics"};
  app.require_subcommand(1);
  app.fallthrough();

  Output output;
  app.add_option("--report", output.report_path, "write the JSON report to this file")
      ->capture_default_str();

  std::string in_path, out_path, clique_path, witness_path, order_path;
  int d = 8, n = 10, attach = 2, trials = 1;
  std::optional<int> k_opt;
  std::uint64_t seed = 0;
  std::uint64_t node_budget = 100'000'000;
  std::int64_t secondary_threshold = 1;
  std::vector<int> d_list;

  auto* gen_tight = app.add_subcommand("gen-tight", "emit a tight construction with its witness");
  gen_tight->add_option("--d", d, "maximum degree parameter (>= 8)")->required();
  gen_tight->add_option("-o,--output", out_path, "graph output file")->required();
  gen_tight->add_option("--witness-out", witness_path, "also write the clique witness, one label per line");

  auto* gen_random = app.add_subcommand("gen-random", "emit a random 2-degenerate graph");
  gen_random->add_option("--n", n, "vertex count")->required();
  gen_random->add_option("--attach", attach, "edges per new vertex (1 or 2)")->capture_default_str();
  gen_random->add_option("--seed", seed, "rng seed")->capture_default_str();
  gen_random->add_option("-o,--output", out_path, "graph output file")->required();

  auto* square_cmd = app.add_subcommand("square", "write the square of a graph");
  square_cmd->add_option("-i,--input", in_path, "graph input file")->required();
  square_cmd->add_option("-o,--output", out_path, "graph output file")->required();

  auto* clique_cmd = app.add_subcommand("clique", "exact maximum clique");
  clique_cmd->add_option("-i,--input", in_path, "graph input file")->required();
  clique_cmd->add_option("--node-budget", node_budget, "abort after this many search nodes (0 = unlimited)")
      ->capture_default_str();

  auto* degeneracy_cmd = app.add_subcommand("degeneracy", "degeneracy number and orders");
  degeneracy_cmd->add_option("-i,--input", in_path, "graph input file")->required();
  degeneracy_cmd->add_option("--k", k_opt, "also test k-degeneracy");
  degeneracy_cmd->add_option("-o,--order-out", order_path, "write a degeneracy order");

  auto* mad_cmd = app.add_subcommand("mad", "exact maximum average degree with witness");
  mad_cmd->add_option("-i,--input", in_path, "graph input file")->required();

  auto* extract_cmd = app.add_subcommand("extract-nice", "token pass, classification and the nice triple");
  extract_cmd->add_option("-i,--input", in_path, "graph input file")->required();
  extract_cmd->add_option("--clique", clique_path, "square-clique file, one label per line")->required();
  extract_cmd->add_option("--d", d, "degree parameter")->required();
  extract_cmd->add_option("--secondary-threshold", secondary_threshold,
                          "primary count needed before a vertex relays secondaries")
      ->capture_default_str();

  auto* hstar_cmd = app.add_subcommand("hstar", "contracted multigraph analysis of an extraction");
  hstar_cmd->add_option("-i,--input", in_path, "graph input file")->required();
  hstar_cmd->add_option("--clique", clique_path, "square-clique file")->required();
  hstar_cmd->add_option("--d", d, "degree parameter")->required();
  hstar_cmd->add_option("--secondary-threshold", secondary_threshold, "")->capture_default_str();

  auto* pipeline_cmd = app.add_subcommand("pipeline", "full chain with one consolidated report");
  pipeline_cmd->add_option("-i,--input", in_path, "graph input file")->required();
  pipeline_cmd->add_option("--clique", clique_path, "square-clique file")->required();
  pipeline_cmd->add_option("--d", d, "degree parameter")->required();
  pipeline_cmd->add_option("--secondary-threshold", secondary_threshold, "")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify-tight", "check the tight family invariants");
  verify_cmd->add_option("--d", d_list, "degree parameters to verify")->required();
  verify_cmd->add_option("--node-budget", node_budget, "clique search budget")->capture_default_str();

  auto* sweep_cmd = app.add_subcommand("bound-sweep", "clique and degeneracy bounds on random instances");
  sweep_cmd->add_option("--n", n, "vertices per instance")->required();
  sweep_cmd->add_option("--trials", trials, "number of instances")->required();
  sweep_cmd->add_option("--seed", seed, "base rng seed")->capture_default_str();
  sweep_cmd->add_option("--node-budget", node_budget, "clique search budget")->capture_default_str();

  app.add_subcommand("lp-solutions", "integer solutions of the final counting system");

  CLI11_PARSE(app, argc, argv);

  try {
    RunReport report;
    if (gen_tight->parsed())
      report = degsq::cli::cmd_gen_tight(d, out_path, witness_path);
    else if (gen_random->parsed())
      report = degsq::cli::cmd_gen_random(n, attach, seed, out_path);
    else if (square_cmd->parsed())
      report = degsq::cli::cmd_square(in_path, out_path);
    else if (clique_cmd->parsed())
      report = degsq::cli::cmd_clique(in_path, node_budget);
    else if (degeneracy_cmd->parsed())
      report = degsq::cli::cmd_degeneracy(in_path, k_opt, order_path);
    else if (mad_cmd->parsed())
      report = degsq::cli::cmd_mad(in_path);
    else if (extract_cmd->parsed())
      report = degsq::cli::cmd_extract_nice(in_path, clique_path, d, secondary_threshold);
    else if (hstar_cmd->parsed())
      report = degsq::cli::cmd_hstar(in_path, clique_path, d, secondary_threshold);
    else if (pipeline_cmd->parsed())
      report = degsq::cli::cmd_pipeline(in_path, clique_path, d, secondary_threshold);
    else if (verify_cmd->parsed())
      report = degsq::cli::cmd_verify_tight(d_list, node_budget);
    else if (sweep_cmd->parsed())
      report = degsq::cli::cmd_bound_sweep(n, trials, seed, node_budget);
    else
      report = degsq::cli::cmd_lp_solutions();
    return output.finish(std::move(report));
  } catch (const degsq::budget_exhausted& ex) {
    std::cerr << "budget exhausted: " << ex.what() << "\n";
    return degsq::cli::kExitBudget;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return degsq::cli::kExitInput;
  }
}
