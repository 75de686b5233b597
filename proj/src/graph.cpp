#include "fastmis/graph.hpp"

#include <algorithm>
#include <string>

namespace fastmis {

Graph::Graph(std::size_t n)
    : original_n_(n),
      alive_count_(n),
      adjacency_(n),
      alive_(n, 1),
      live_degree_(n, 0) {}

Graph Graph::load(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw ParseError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") has an endpoint >= n = " + std::to_string(n));
    if (u == v) continue;
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& list = g.adjacency_[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    g.live_degree_[v] = list.size();
    g.edge_count_ += list.size();
  }
  g.edge_count_ /= 2;
  return g;
}

std::vector<Vertex> Graph::neighbors_live(Vertex v) const {
  require(alive(v), [&] { return "neighbors_live: vertex " + std::to_string(v) + " is not alive"; });
  std::vector<Vertex> out;
  out.reserve(live_degree_[v]);
  for_each_live_neighbor(v, [&](Vertex u) { out.push_back(u); });
  return out;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!alive(u) || !alive(v)) return false;
  // Search the shorter list.
  const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  Vertex target = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), target);
}

std::vector<Vertex> Graph::alive_vertices() const {
  std::vector<Vertex> out;
  out.reserve(alive_count_);
  for (Vertex v = 0; v < adjacency_.size(); ++v)
    if (alive_[v]) out.push_back(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex v = 0; v < adjacency_.size(); ++v) {
    if (!alive_[v]) continue;
    for (Vertex u : adjacency_[v])
      if (u > v && alive_[u]) out.emplace_back(v, u);
  }
  return out;
}

void Graph::remove_vertex(Vertex v) {
  require(alive(v), [&] { return "remove_vertex: vertex " + std::to_string(v) + " is not alive"; });
  alive_[v] = 0;
  --alive_count_;
  edge_count_ -= live_degree_[v];
  for (Vertex u : adjacency_[v])
    if (alive_[u]) --live_degree_[u];
  live_degree_[v] = 0;
}

Vertex Graph::append_vertex() {
  Vertex id = static_cast<Vertex>(adjacency_.size());
  adjacency_.emplace_back();
  alive_.push_back(1);
  live_degree_.push_back(0);
  ++alive_count_;
  return id;
}

Vertex Graph::contract_fold(Vertex v, Vertex u, Vertex w) {
  require(alive(v) && alive(u) && alive(w), "contract_fold: vertices must be alive");
  require(u != w && live_degree_[v] == 2 && adjacent(v, u) && adjacent(v, w),
          "contract_fold: N(v) must be exactly {u, w}");
  require(!adjacent(u, w), "contract_fold: u and w must not be adjacent");

  std::vector<Vertex> merged;
  merged.reserve(live_degree_[u] + live_degree_[w]);
  for_each_live_neighbor(u, [&](Vertex x) { if (x != v) merged.push_back(x); });
  for_each_live_neighbor(w, [&](Vertex x) { if (x != v) merged.push_back(x); });
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

  remove_vertex(v);
  remove_vertex(u);
  remove_vertex(w);
  return add_gadget(merged);
}

Vertex Graph::add_gadget(std::span<const Vertex> neighbor_ids) {
  for (Vertex x : neighbor_ids)
    require(alive(x), [&] { return "add_gadget: neighbor " + std::to_string(x) + " is not alive"; });
  std::vector<Vertex> sorted(neighbor_ids.begin(), neighbor_ids.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  Vertex g = append_vertex();
  adjacency_[g] = sorted;
  live_degree_[g] = sorted.size();
  for (Vertex x : sorted) {
    adjacency_[x].push_back(g);  // g exceeds every existing id
    ++live_degree_[x];
  }
  edge_count_ += sorted.size();
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  require(u != v && alive(u) && alive(v), "add_edge: endpoints must be distinct and alive");
  auto& a = adjacency_[u];
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it != a.end() && *it == v) return;
  a.insert(it, v);
  auto& b = adjacency_[v];
  b.insert(std::lower_bound(b.begin(), b.end(), u), u);
  ++live_degree_[u];
  ++live_degree_[v];
  ++edge_count_;
}

void Graph::prune_dead_entries() {
  for (Vertex v = 0; v < adjacency_.size(); ++v) {
    if (!alive_[v]) {
      adjacency_[v].clear();
      adjacency_[v].shrink_to_fit();
      continue;
    }
    auto& list = adjacency_[v];
    if (list.size() == live_degree_[v]) continue;
    list.erase(std::remove_if(list.begin(), list.end(), [&](Vertex u) { return !alive_[u]; }),
               list.end());
  }
}

Graph::Compacted Graph::compact() const {
  Compacted out;
  out.to_compact.assign(adjacency_.size(), kNoVertex);
  for (Vertex v = 0; v < adjacency_.size(); ++v) {
    if (!alive_[v]) continue;
    out.to_compact[v] = static_cast<Vertex>(out.to_original.size());
    out.to_original.push_back(v);
  }
  Graph& g = out.graph;
  g = Graph(out.to_original.size());
  for (Vertex c = 0; c < out.to_original.size(); ++c) {
    auto& list = g.adjacency_[c];
    list.reserve(live_degree_[out.to_original[c]]);
    for_each_live_neighbor(out.to_original[c], [&](Vertex u) { list.push_back(out.to_compact[u]); });
    // ascending source ids map to ascending compact ids, so the list stays sorted
    g.live_degree_[c] = list.size();
    g.edge_count_ += list.size();
  }
  g.edge_count_ /= 2;
  return out;
}

void Graph::check_consistency() const {
  std::size_t alive = 0;
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < adjacency_.size(); ++v) {
    const auto& list = adjacency_[v];
    require(std::is_sorted(list.begin(), list.end()), [&] { return "adjacency of " + std::to_string(v) + " unsorted"; });
    require(std::adjacent_find(list.begin(), list.end()) == list.end(),
            "duplicate neighbor in adjacency of " + std::to_string(v));
    std::size_t live = 0;
    for (Vertex u : list) {
      require(u != v, [&] { return "self-loop at " + std::to_string(v); });
      require(u < adjacency_.size(), [&] { return "neighbor id out of range at " + std::to_string(v); });
      if (alive_[u]) ++live;
      if (alive_[v] && alive_[u])
        require(std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v),
                "asymmetric edge " + std::to_string(v) + "-" + std::to_string(u));
    }
    if (alive_[v]) {
      ++alive;
      require(live == live_degree_[v], [&] { return "live_degree mismatch at " + std::to_string(v); });
      degree_sum += live;
    }
  }
  require(alive == alive_count_, "alive count mismatch");
  require(degree_sum % 2 == 0, "odd live degree sum");
  require(degree_sum / 2 == edge_count_, "edge count mismatch");
}

}  // namespace fastmis
