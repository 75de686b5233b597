#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "fastmis/types.hpp"

namespace fastmis {

using Edge = std::pair<Vertex, Vertex>;

// Undirected simple graph with lazy vertex deletion.
//
// Adjacency lists are sorted and keep entries of removed vertices; only the
// alive flag and the live degree change on removal. Reductions may append
// fresh vertices (fold targets, twin gadgets) after the original id range,
// and since ids grow monotonically, appending keeps every list sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  // Builds a graph on n vertices, dropping self-loops and duplicate pairs.
  // Throws ParseError when an endpoint is >= n.
  static Graph load(std::size_t n, std::span<const Edge> edges);

  // Number of vertices the graph was created with.
  std::size_t original_size() const { return original_n_; }
  // Total ids handed out, including gadget vertices (== next fresh id).
  std::size_t id_bound() const { return adjacency_.size(); }
  std::size_t alive_count() const { return alive_count_; }
  std::size_t edge_count() const { return edge_count_; }

  bool alive(Vertex v) const { return v < adjacency_.size() && alive_[v]; }
  std::size_t degree(Vertex v) const { return live_degree_[v]; }

  // Raw sorted adjacency, dead entries included.
  std::span<const Vertex> adjacency(Vertex v) const { return adjacency_[v]; }

  template <typename F>
  void for_each_live_neighbor(Vertex v, F&& f) const {
    for (Vertex u : adjacency_[v])
      if (alive_[u]) f(u);
  }

  // Alive members of N(v), sorted. v must be alive.
  std::vector<Vertex> neighbors_live(Vertex v) const;

  // True when both endpoints are alive and share an edge.
  bool adjacent(Vertex u, Vertex v) const;

  std::vector<Vertex> alive_vertices() const;
  // Alive edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  void remove_vertex(Vertex v);

  // Contracts the degree-2 vertex v and its non-adjacent neighbors u, w into a
  // fresh vertex adjacent to (N(u) ∪ N(w)) \ {u, v, w}. Returns the new id.
  Vertex contract_fold(Vertex v, Vertex u, Vertex w);

  // Appends a fresh vertex adjacent to exactly the given alive vertices.
  Vertex add_gadget(std::span<const Vertex> neighbor_ids);

  // Inserts edge {u, v} between two distinct alive vertices; no-op if present.
  void add_edge(Vertex u, Vertex v);

  // Drops dead entries from every adjacency list.
  void prune_dead_entries();

  struct Compacted;
  // Renumbers alive vertices densely (ascending id order).
  Compacted compact() const;

  // Full rescan of every structural invariant; throws ContractViolation.
  void check_consistency() const;

 private:
  Vertex append_vertex();

  std::size_t original_n_ = 0;
  std::size_t alive_count_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<char> alive_;
  std::vector<std::size_t> live_degree_;
};

struct Graph::Compacted {
  Graph graph;
  std::vector<Vertex> to_original;  // compact id -> id in the source graph
  std::vector<Vertex> to_compact;   // source id -> compact id, kNoVertex if dead
};

}  // namespace fastmis
