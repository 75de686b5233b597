#pragma once

// Helpers shared by the test binaries. Everything here is computed
// independently of the library's reduction and search code.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "fastmis/generators.hpp"
#include "fastmis/graph.hpp"
#include "fastmis/oracle.hpp"

namespace testing {

using fastmis::Edge;
using fastmis::Graph;
using fastmis::Vertex;

inline Graph make(std::size_t n, std::vector<Edge> edges) { return Graph::load(n, edges); }

// Pairwise check against an edge list of the original graph.
inline bool independent_in(const Graph& g, const std::vector<Vertex>& set) {
  std::vector<char> in(g.id_bound(), 0);
  for (Vertex v : set) {
    if (v >= g.id_bound() || !g.alive(v) || in[v]) return false;
    in[v] = 1;
  }
  for (auto [u, v] : g.edges())
    if (in[u] && in[v]) return false;
  return true;
}

inline std::size_t optimum(const Graph& g) { return fastmis::exact_mis(g, 64).size; }

// Random graph with n in [lo, hi] and a density drawn per instance, so sparse,
// medium and dense graphs all occur.
inline Graph random_small(fastmis::Rng& rng, std::size_t lo, std::size_t hi) {
  std::size_t n = lo + fastmis::uniform_index(rng, hi - lo + 1);
  static const double densities[] = {0.1, 0.15, 0.2, 0.3, 0.4, 0.5, 0.7};
  double p = densities[fastmis::uniform_index(rng, std::size(densities))];
  return fastmis::gen::gnp(n, p, rng);
}

// Maximum independent set size by scanning all subsets; tiny graphs only.
inline std::size_t subset_scan_optimum(std::size_t n, const std::vector<Edge>& edges) {
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (auto [u, v] : edges)
      if ((s >> u & 1) && (s >> v & 1)) {
        ok = false;
        break;
      }
    if (ok) best = std::max<std::size_t>(best, __builtin_popcount(s));
  }
  return best;
}

}  // namespace testing
