#include "fastmis/cut.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fastmis/bucket_queue.hpp"

namespace fastmis {

std::size_t cut_count(double fraction, std::size_t alive) {
  require(fraction >= 0.0 && fraction <= 1.0, "cut fraction must lie in [0, 1]");
  if (fraction == 0.0 || alive == 0) return 0;
  // Guard against 0.01 * 200 landing a hair above 2.
  double exact = fraction * static_cast<double>(alive);
  auto count = static_cast<std::size_t>(std::ceil(exact - 1e-9 * std::max(1.0, exact)));
  return std::clamp<std::size_t>(count, 1, alive);
}

std::vector<Vertex> cut_absolute(Graph& g, std::size_t threshold) {
  std::vector<Vertex> doomed;
  for (Vertex v : g.alive_vertices())
    if (g.degree(v) > threshold) doomed.push_back(v);
  for (Vertex v : doomed) g.remove_vertex(v);
  return doomed;
}

std::vector<Vertex> cut_relative(Graph& g, double fraction, Rng& rng) {
  const std::size_t target = cut_count(fraction, g.alive_count());
  std::vector<Vertex> removed;
  if (target == 0) return removed;
  removed.reserve(target);

  DegreeBuckets queue(g.id_bound());
  for (Vertex v : g.alive_vertices()) queue.insert(v, g.degree(v));
  while (removed.size() < target) {
    Vertex v = queue.pop_random_max(rng);
    g.remove_vertex(v);
    removed.push_back(v);
    g.for_each_live_neighbor(v, [&](Vertex u) { queue.change_key(u, g.degree(u)); });
  }
  return removed;
}

std::vector<Vertex> top_degree_snapshot(const Graph& g, double fraction, Rng& rng) {
  const std::size_t target = cut_count(fraction, g.alive_count());
  if (target == 0) return {};
  std::vector<std::size_t> count;
  for (Vertex v = 0; v < g.id_bound(); ++v) {
    if (!g.alive(v)) continue;
    if (g.degree(v) >= count.size()) count.resize(g.degree(v) + 1);
    ++count[g.degree(v)];
  }
  // Smallest degree that still gets (part of) its class cut.
  std::size_t threshold = count.size(), taken = 0;
  while (taken < target) taken += count[--threshold];

  std::vector<Vertex> above, ties;
  for (Vertex v = 0; v < g.id_bound(); ++v) {
    if (!g.alive(v)) continue;
    if (g.degree(v) > threshold) above.push_back(v);
    else if (g.degree(v) == threshold) ties.push_back(v);
  }
  std::stable_sort(above.begin(), above.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  // Uniform subset of the tied class via a partial shuffle.
  const std::size_t from_ties = target - above.size();
  for (std::size_t i = 0; i < from_ties; ++i)
    std::swap(ties[i], ties[i + uniform_index(rng, ties.size() - i)]);
  above.insert(above.end(), ties.begin(), ties.begin() + static_cast<std::ptrdiff_t>(from_ties));
  return above;
}

}  // namespace fastmis
