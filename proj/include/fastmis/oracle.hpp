#pragma once

#include <cstddef>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "fastmis/graph.hpp"
#include "fastmis/solution.hpp"

namespace fastmis {

// Raised when an exact solve is requested on a graph above the node limit.
class OracleRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExactResult {
  std::size_t size = 0;
  std::vector<Vertex> witness;  // sorted ids of the input graph
};

// Exact maximum independent set of the alive part of g by branch and bound:
// degree <= 1 vertices are taken outright, otherwise branch on a maximum
// degree vertex, pruning with |I| + |candidates| against a greedy incumbent.
ExactResult exact_mis(const Graph& g, std::size_t node_limit = 40);

// Exhaustive 2^n subset scan, n <= 20 alive vertices. Used to validate
// exact_mis itself.
ExactResult brute_force_mis(const Graph& g);

// Every (1,2)-swap (v, u, w) of the solution, u < w, by direct enumeration
// over the graph and solution membership only.
std::vector<std::tuple<Vertex, Vertex, Vertex>> enumerate_swaps(const Graph& g, const Solution& sol);

}  // namespace fastmis
