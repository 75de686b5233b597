#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fastmis/arw.hpp"
#include "fastmis/metrics.hpp"
#include "fastmis/reduce.hpp"

namespace fastmis {

enum class Algorithm { OnlineMis, KerMis, Arw, Kernel };

// "onlinemis", "kermis", "arw", "kernel". Throws std::invalid_argument.
Algorithm parse_algorithm(const std::string& name);
const char* algorithm_name(Algorithm a);

struct PipelineOptions {
  double cut_fraction = 0.01;
  PerturbationParams perturbation;
};

// Every pipeline returns a sorted independent set of g in g's own ids and
// logs (elapsed, size) improvements measured from the call's start.

// Snapshot-cuts the top-degree vertices, commits residual-isolated vertices
// (degree <= 2 with a clique neighborhood) in one pass, fills greedily and
// runs iterated search that keeps committing isolated vertices as it meets
// them.
std::vector<Vertex> online_mis(const Graph& g, const PipelineOptions& options, const Budget& budget,
                               Rng& rng, ConvergenceLog& log);

// Kernelizes without isolated vertex removal, cuts the kernel relatively,
// runs greedy + iterated search on what is left and lifts the result.
std::vector<Vertex> ker_mis(const Graph& g, const PipelineOptions& options, const Budget& budget,
                            Rng& rng, ConvergenceLog& log);

// Greedy + iterated search on the untouched graph.
std::vector<Vertex> plain_arw(const Graph& g, const PipelineOptions& options, const Budget& budget,
                              Rng& rng, ConvergenceLog& log);

// Kernelizes with every rule and searches the kernel without any cutting.
std::vector<Vertex> kernel_arw(const Graph& g, const PipelineOptions& options, const Budget& budget,
                               Rng& rng, ConvergenceLog& log);

std::vector<Vertex> run_algorithm(Algorithm algo, const Graph& g, const PipelineOptions& options,
                                  const Budget& budget, Rng& rng, ConvergenceLog& log);

}  // namespace fastmis
