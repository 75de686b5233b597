#pragma once

#include <cstddef>
#include <vector>

#include "fastmis/graph.hpp"

namespace fastmis {

// Number of vertices a fraction selects out of `alive`: ceil(fraction * alive),
// so any positive fraction removes at least one vertex.
std::size_t cut_count(double fraction, std::size_t alive);

// Removes every vertex whose live degree exceeds `threshold`, judged on the
// degrees at call time. Returns the removed ids, ascending.
std::vector<Vertex> cut_absolute(Graph& g, std::size_t threshold);

// Repeatedly removes a vertex of maximum current live degree (ties uniform at
// random) until cut_count(fraction, alive at start) vertices are gone.
// Returns the removed ids in removal order.
std::vector<Vertex> cut_relative(Graph& g, double fraction, Rng& rng);

// The cut_count(fraction, alive) highest-degree alive vertices by a single
// degree snapshot, ties broken at random. The graph is left untouched.
std::vector<Vertex> top_degree_snapshot(const Graph& g, double fraction, Rng& rng);

}  // namespace fastmis
