#include "fastmis/pipelines.hpp"

#include <stdexcept>

#include "fastmis/cut.hpp"

namespace fastmis {

Algorithm parse_algorithm(const std::string& name) {
  if (name == "onlinemis") return Algorithm::OnlineMis;
  if (name == "kermis") return Algorithm::KerMis;
  if (name == "arw") return Algorithm::Arw;
  if (name == "kernel") return Algorithm::Kernel;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::OnlineMis: return "onlinemis";
    case Algorithm::KerMis: return "kermis";
    case Algorithm::Arw: return "arw";
    case Algorithm::Kernel: return "kernel";
  }
  return "?";
}

namespace {

SearchOptions search_options(const PipelineOptions& options, const Stopwatch& clock) {
  SearchOptions s;
  s.perturbation = options.perturbation;
  s.clock = &clock;
  return s;
}

std::vector<Vertex> reduce_then_search(const Graph& g, RuleSet rules, double cut_fraction,
                                       const PipelineOptions& options, const Budget& budget,
                                       Rng& rng, ConvergenceLog& log) {
  Stopwatch clock;
  KernelResult kr = kernelize(g, rules);
  const std::size_t offset = kr.stack.offset();
  if (kr.kernel.alive_count() == 0) {
    log.record(budget.iterations ? 0.0 : clock.seconds(), offset);
    return lift_solution(kr, {});
  }

  Graph residual = kr.kernel;
  if (cut_fraction > 0) cut_relative(residual, cut_fraction, rng);
  Graph::Compacted packed = residual.compact();

  Solution sol(packed.graph);
  greedy_fill(sol, rng);
  SearchOptions search = search_options(options, clock);
  search.size_offset = offset;
  SearchOutcome outcome = run_iterated(sol, budget, log, rng, search);

  std::vector<Vertex> in_kernel;
  in_kernel.reserve(outcome.best.size());
  for (Vertex v : outcome.best) in_kernel.push_back(packed.to_original[v]);
  return lift_solution(kr, in_kernel);
}

}  // namespace

std::vector<Vertex> online_mis(const Graph& g, const PipelineOptions& options, const Budget& budget,
                               Rng& rng, ConvergenceLog& log) {
  Stopwatch clock;
  Solution sol(g);
  // Vertices without edges are never worth cutting.
  for (Vertex v : top_degree_snapshot(g, options.cut_fraction, rng))
    if (g.degree(v) > 0) sol.mark_removed(v);

  greedy_fill(sol, rng, true);
  SearchOptions search = search_options(options, clock);
  search.online_isolation = true;
  return run_iterated(sol, budget, log, rng, search).best;
}

std::vector<Vertex> ker_mis(const Graph& g, const PipelineOptions& options, const Budget& budget,
                            Rng& rng, ConvergenceLog& log) {
  return reduce_then_search(g, RuleSet::akiba_iwata(), options.cut_fraction, options, budget, rng, log);
}

std::vector<Vertex> plain_arw(const Graph& g, const PipelineOptions& options, const Budget& budget,
                              Rng& rng, ConvergenceLog& log) {
  Stopwatch clock;
  Solution sol(g);
  greedy_fill(sol, rng);
  return run_iterated(sol, budget, log, rng, search_options(options, clock)).best;
}

std::vector<Vertex> kernel_arw(const Graph& g, const PipelineOptions& options, const Budget& budget,
                               Rng& rng, ConvergenceLog& log) {
  return reduce_then_search(g, RuleSet::all(), 0.0, options, budget, rng, log);
}

std::vector<Vertex> run_algorithm(Algorithm algo, const Graph& g, const PipelineOptions& options,
                                  const Budget& budget, Rng& rng, ConvergenceLog& log) {
  switch (algo) {
    case Algorithm::OnlineMis: return online_mis(g, options, budget, rng, log);
    case Algorithm::KerMis: return ker_mis(g, options, budget, rng, log);
    case Algorithm::Arw: return plain_arw(g, options, budget, rng, log);
    case Algorithm::Kernel: return kernel_arw(g, options, budget, rng, log);
  }
  throw std::logic_error("unreachable");
}

}  // namespace fastmis
