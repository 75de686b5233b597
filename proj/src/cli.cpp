#include "fastmis/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <ostream>

#include "fastmis/io.hpp"
#include "fastmis/metrics.hpp"
#include "fastmis/pipelines.hpp"
#include "fastmis/reduce.hpp"

namespace fastmis {
namespace {

struct GraphArgs {
  std::string path;
  std::string format = "metis";
  std::optional<std::size_t> n;

  void attach(CLI::App* cmd) {
    cmd->add_option("--graph", path, "input graph file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--format", format, "graph file format")
        ->check(CLI::IsMember({"metis", "edges"}));
    cmd->add_option("--n", n, "vertex count for edge lists");
  }
  Graph load() const { return read_graph_file(path, parse_graph_format(format), n); }
};

std::string format_ratio(double r) {
  if (std::isinf(r)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", r);
  return buf;
}

std::string format_time(std::optional<double> t) {
  if (!t) return "-";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", *t);
  return buf;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Large independent sets in sparse graphs", "fastmis"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "compute an independent set");
  GraphArgs solve_graph;
  solve_graph.attach(solve);
  std::string algo = "onlinemis";
  std::uint64_t seed = 1;
  std::optional<double> time_limit;
  std::optional<std::uint64_t> iterations;
  double cut_fraction = 0.01;
  std::size_t pair_cap = 100;
  std::string log_path, solution_path;
  solve->add_option("--algo", algo, "onlinemis | kermis | arw | kernel")
      ->check(CLI::IsMember({"onlinemis", "kermis", "arw", "kernel"}));
  solve->add_option("--seed", seed);
  auto* tl = solve->add_option("--time-limit", time_limit, "wall-clock budget in seconds")
                 ->check(CLI::NonNegativeNumber);
  auto* it = solve->add_option("--iterations", iterations, "iteration budget (reproducible)");
  tl->excludes(it);
  solve->add_option("--cut-fraction", cut_fraction)->check(CLI::Range(0.0, 1.0));
  solve->add_option("--pair-cap", pair_cap)->check(CLI::PositiveNumber);
  solve->add_option("--log", log_path, "convergence log CSV");
  solve->add_option("--solution", solution_path, "solution file");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check a solution file against a graph");
  GraphArgs verify_graph;
  verify_graph.attach(verify_cmd);
  std::string verify_solution;
  verify_cmd->add_option("--solution", verify_solution)->required()->check(CLI::ExistingFile);

  // speedup
  auto* speedup = app.add_subcommand("speedup", "maximum speedup of base over other");
  std::string base_log, other_log;
  speedup->add_option("base", base_log)->required()->check(CLI::ExistingFile);
  speedup->add_option("other", other_log)->required()->check(CLI::ExistingFile);

  // quality-time
  auto* quality_cmd = app.add_subcommand("quality-time", "time to reach a fraction of the best size");
  std::vector<std::string> quality_logs;
  double quality = 0.995;
  quality_cmd->add_option("logs", quality_logs)->required()->check(CLI::ExistingFile);
  quality_cmd->add_option("--quality", quality)->check(CLI::Range(0.0, 1.0));

  // kernel-stats
  auto* stats = app.add_subcommand("kernel-stats", "reduction statistics");
  GraphArgs stats_graph;
  stats_graph.attach(stats);
  std::string rules_text = "akiba-iwata";
  bool as_json = false;
  stats->add_option("--rules", rules_text, "comma separated rules, 'all', 'akiba-iwata' or 'none'");
  stats->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0; every usage error maps to the input-error code.
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) {
      Graph g = solve_graph.load();
      Budget budget = iterations ? Budget::iteration_count(*iterations)
                                 : Budget::wall_clock(time_limit.value_or(10.0));
      PipelineOptions options;
      options.cut_fraction = cut_fraction;
      options.perturbation.pair_cap = pair_cap;
      Algorithm a = parse_algorithm(algo);
      ConvergenceLog log(std::filesystem::path(solve_graph.path).stem().string(), algo, seed);
      Rng rng(seed);
      std::vector<Vertex> solution = run_algorithm(a, g, options, budget, rng, log);
      VerifyReport report = verify(g, solution);
      if (!report.ok()) {
        err << "internal error: produced solution is not independent\n";
        return 3;
      }
      if (!solution_path.empty()) save_solution(solution_path, solution);
      if (!log_path.empty()) save_log(log_path, log);
      out << "size " << solution.size() << '\n';
      return 0;
    }

    if (verify_cmd->parsed()) {
      Graph g = verify_graph.load();
      std::vector<Vertex> solution = load_solution(verify_solution);
      VerifyReport r = verify(g, solution);
      if (!r.valid_ids) {
        err << "invalid: unknown or repeated vertex id\n";
        return 1;
      }
      if (!r.independent) {
        err << "not independent: edge (" << r.conflict->first << ", " << r.conflict->second << ")\n";
        return 1;
      }
      out << "independent size " << r.size << '\n';
      out << (r.insertable == 0 ? "maximal" : "not maximal") << " (" << r.insertable
          << " insertable vertices)\n";
      return 0;
    }

    if (speedup->parsed()) {
      ConvergenceLog base = load_log(base_log);
      ConvergenceLog other = load_log(other_log);
      out << format_ratio(max_speedup(base, other)) << '\n';
      return 0;
    }

    if (quality_cmd->parsed()) {
      std::vector<ConvergenceLog> logs;
      std::size_t best = 0;
      for (const auto& p : quality_logs) {
        logs.push_back(load_log(p));
        best = std::max(best, logs.back().best_size());
      }
      const std::size_t target = quality_target(quality, best);
      out << "best " << best << " target " << target << '\n';
      // Per-algorithm mean over the runs that reached the target.
      std::map<std::string, std::pair<double, std::size_t>> reached;
      std::map<std::string, std::size_t> runs;
      for (std::size_t i = 0; i < logs.size(); ++i) {
        auto t = time_to_size(logs[i], target);
        out << quality_logs[i] << ' ' << logs[i].algorithm << ' ' << logs[i].seed << ' '
            << format_time(t) << '\n';
        ++runs[logs[i].algorithm];
        if (t) {
          reached[logs[i].algorithm].first += *t;
          ++reached[logs[i].algorithm].second;
        }
      }
      for (const auto& [name, count] : runs) {
        auto found = reached.find(name);
        std::optional<double> mean;
        if (found != reached.end()) mean = found->second.first / found->second.second;
        out << "average " << name << ' ' << format_time(mean) << ' '
            << (found == reached.end() ? 0 : found->second.second) << '/' << count << '\n';
      }
      return 0;
    }

    if (stats->parsed()) {
      Graph g = stats_graph.load();
      KernelResult kr = kernelize(g, RuleSet::parse(rules_text));
      if (as_json) {
        nlohmann::json j;
        j["input_n"] = g.alive_count();
        j["input_m"] = g.edge_count();
        j["kernel_n"] = kr.reduced_n;
        j["kernel_m"] = kr.reduced_m;
        j["offset"] = kr.stack.offset();
        j["rules"] = kr.per_rule_counts;
        out << j.dump(2) << '\n';
      } else {
        for (const auto& [name, count] : kr.per_rule_counts) out << name << ' ' << count << '\n';
        out << "kernel_n " << kr.reduced_n << '\n';
        out << "kernel_m " << kr.reduced_m << '\n';
        out << "offset " << kr.stack.offset() << '\n';
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace fastmis
