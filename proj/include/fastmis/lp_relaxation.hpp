#pragma once

#include <cstdint>
#include <vector>

#include "fastmis/graph.hpp"

namespace fastmis {

// Optimal solution of the independent-set LP relaxation
//   max sum x_v  s.t.  x_u + x_v <= 1 for every edge, x >= 0,
// restricted to the alive part of a graph. Values are stored doubled so they
// stay integral: 0, 1 (meaning 1/2) or 2, indexed by vertex id. Dead ids hold 0.
struct HalfIntegralSolution {
  std::vector<std::uint8_t> twice_value;
  std::size_t twice_objective = 0;

  std::size_t count_with(std::uint8_t twice) const;
};

// Solves the relaxation through maximum matching on the bipartite double
// cover (left/right copy per vertex, two cover edges per graph edge).
//
// With minimize_half_part set, a second pass over the half-valued vertices
// picks, among all optimal half-integral solutions, one whose half-valued
// part is smallest: it orients the residual graph of a perfect matching,
// computes strongly connected components and fixes every vertex whose two
// copies fall in different components.
HalfIntegralSolution solve_lp_relaxation(const Graph& g, bool minimize_half_part = true);

}  // namespace fastmis
