#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "fastmis/graph.hpp"

namespace fastmis {

// Set of vertex ids with O(1) insert/erase/membership and random access.
class IndexedSet {
 public:
  explicit IndexedSet(std::size_t id_bound = 0) : slot_(id_bound, kAbsent) {}

  bool contains(Vertex v) const { return slot_[v] != kAbsent; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  Vertex operator[](std::size_t i) const { return items_[i]; }
  const std::vector<Vertex>& items() const { return items_; }

  void insert(Vertex v) {
    if (contains(v)) return;
    slot_[v] = static_cast<std::uint32_t>(items_.size());
    items_.push_back(v);
  }
  void erase(Vertex v) {
    if (!contains(v)) return;
    Vertex last = items_.back();
    items_[slot_[v]] = last;
    slot_[last] = slot_[v];
    items_.pop_back();
    slot_[v] = kAbsent;
  }

 private:
  static constexpr std::uint32_t kAbsent = static_cast<std::uint32_t>(-1);
  std::vector<Vertex> items_;
  std::vector<std::uint32_t> slot_;
};

// Current independent set of a graph with the bookkeeping local search needs.
//
// Every vertex is either removed (dead in the graph, cut, or dropped next to
// a committed vertex), in the solution, or outside it. tightness(v) counts
// solution neighbors, so an outside vertex with tightness 0 is free
// (insertable). Insert and remove cost O(deg). Removal also queues, as swap
// candidates, the solution vertices that gain a 1-tight neighbor.
class Solution {
 public:
  explicit Solution(const Graph& g);

  const Graph& graph() const { return *g_; }
  std::size_t size() const { return size_; }
  bool contains(Vertex v) const { return in_[v] != 0; }
  std::size_t tightness(Vertex v) const { return tightness_[v]; }
  bool removed(Vertex v) const { return removed_[v] != 0; }
  bool committed(Vertex v) const { return committed_[v] != 0; }
  bool is_free(Vertex v) const { return free_.contains(v); }
  // Neighbors that are not removed.
  std::size_t residual_degree(Vertex v) const { return residual_degree_[v]; }
  // Step count at which v last left the solution; 0 if it never did.
  std::uint64_t last_out(Vertex v) const { return last_out_[v]; }

  const IndexedSet& free_vertices() const { return free_; }
  // Vertices that are neither removed nor in the solution.
  const IndexedSet& outside() const { return outside_; }
  std::vector<Vertex> members() const;

  void insert(Vertex v);
  void remove(Vertex v);

  // Takes an outside vertex out of the search for good.
  void mark_removed(Vertex v);
  // Inserts free vertex v permanently and removes its whole neighborhood.
  void commit(Vertex v) {
    commit(v, [](Vertex, Vertex) {});
  }
  // As above; visit(x, z) runs for every alive neighbor z of each newly
  // removed x, with all calls for one x consecutive.
  template <class Visit>
  void commit(Vertex v, Visit&& visit) {
    insert(v);
    committed_[v] = 1;
    commits_.push_back(v);
    for (Vertex x : g_->adjacency(v)) {
      if (!g_->alive(x) || removed_[x]) continue;
      unlink(x);
      for (Vertex z : g_->adjacency(x)) {
        if (!g_->alive(z)) continue;
        --residual_degree_[z];
        visit(x, z);
      }
    }
  }
  // Vertices committed so far, in commit order.
  const std::vector<Vertex>& commits() const { return commits_; }

  // Residual degree <= 2 and the residual closed neighborhood is a clique.
  bool is_residual_isolated(Vertex v) const;

  // The solution neighbor of a 1-tight vertex.
  Vertex solution_neighbor(Vertex v) const;

  void push_candidate(Vertex v);
  std::optional<Vertex> pop_candidate();
  std::size_t candidate_count() const { return candidates_.size(); }

  // Records inserts/removes until end_journal(); rollback_journal() undoes
  // them in reverse, skipping moves that commits have made impossible.
  void begin_journal();
  void end_journal();
  void rollback_journal();

  // Full rescan of independence, tightness, free set, residual degrees and
  // size. Throws ContractViolation.
  void check_consistency() const;

 private:
  // Flags x removed and drops it from the free and outside sets.
  void unlink(Vertex x) {
    removed_[x] = 1;
    free_.erase(x);
    outside_.erase(x);
  }

  struct Move {
    bool inserted;
    Vertex v;
  };

  const Graph* g_;
  std::size_t size_ = 0;
  std::vector<char> in_;
  std::vector<char> removed_;
  std::vector<char> committed_;
  std::vector<std::uint32_t> tightness_;
  std::vector<std::uint32_t> residual_degree_;
  std::vector<std::uint64_t> last_out_;
  std::uint64_t clock_ = 0;
  IndexedSet free_;
  IndexedSet outside_;
  std::deque<Vertex> candidates_;
  std::vector<char> queued_;
  std::vector<Vertex> commits_;
  bool journaling_ = false;
  std::vector<Move> journal_;
};

}  // namespace fastmis
