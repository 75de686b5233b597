#include "fastmis/solution.hpp"

#include <string>

namespace fastmis {

Solution::Solution(const Graph& g)
    : g_(&g),
      in_(g.id_bound(), 0),
      removed_(g.id_bound(), 0),
      committed_(g.id_bound(), 0),
      tightness_(g.id_bound(), 0),
      residual_degree_(g.id_bound(), 0),
      last_out_(g.id_bound(), 0),
      free_(g.id_bound()),
      outside_(g.id_bound()),
      queued_(g.id_bound(), 0) {
  for (Vertex v = 0; v < g.id_bound(); ++v) {
    if (!g.alive(v)) {
      removed_[v] = 1;
      continue;
    }
    residual_degree_[v] = static_cast<std::uint32_t>(g.degree(v));
    free_.insert(v);
    outside_.insert(v);
  }
}

std::vector<Vertex> Solution::members() const {
  std::vector<Vertex> out;
  out.reserve(size_);
  for (Vertex v = 0; v < in_.size(); ++v)
    if (in_[v]) out.push_back(v);
  return out;
}

void Solution::insert(Vertex v) {
  require(!removed_[v] && !in_[v], [&] { return "insert: vertex " + std::to_string(v) + " is removed or already in"; });
  require(tightness_[v] == 0, [&] { return "insert: vertex " + std::to_string(v) + " has a solution neighbor"; });
  in_[v] = 1;
  ++size_;
  free_.erase(v);
  outside_.erase(v);
  for (Vertex x : g_->adjacency(v)) {
    if (!g_->alive(x)) continue;
    if (++tightness_[x] == 1) free_.erase(x);
  }
  push_candidate(v);
  if (journaling_) journal_.push_back({true, v});
}

void Solution::remove(Vertex v) {
  require(in_[v] != 0, [&] { return "remove: vertex " + std::to_string(v) + " is not in the solution"; });
  require(!committed_[v], [&] { return "remove: vertex " + std::to_string(v) + " is committed"; });
  in_[v] = 0;
  --size_;
  last_out_[v] = ++clock_;
  outside_.insert(v);
  free_.insert(v);  // its neighbors are outside, so tightness is 0
  for (Vertex x : g_->adjacency(v)) {
    if (!g_->alive(x)) continue;
    std::uint32_t t = --tightness_[x];
    if (removed_[x]) continue;
    if (t == 0) free_.insert(x);
    else if (t == 1) push_candidate(solution_neighbor(x));
  }
  if (journaling_) journal_.push_back({false, v});
}

void Solution::mark_removed(Vertex v) {
  require(!in_[v], [&] { return "mark_removed: vertex " + std::to_string(v) + " is in the solution"; });
  if (removed_[v]) return;
  unlink(v);
  for (Vertex x : g_->adjacency(v))
    if (g_->alive(x)) --residual_degree_[x];
}

bool Solution::is_residual_isolated(Vertex v) const {
  const std::uint32_t d = residual_degree_[v];
  if (d > 2) return false;
  if (d < 2) return true;
  Vertex pair[2];
  int found = 0;
  for (Vertex x : g_->adjacency(v))
    if (!removed_[x]) {
      pair[found++] = x;
      if (found == 2) break;
    }
  return g_->adjacent(pair[0], pair[1]);
}

Vertex Solution::solution_neighbor(Vertex v) const {
  for (Vertex x : g_->adjacency(v))
    if (in_[x]) return x;
  return kNoVertex;
}

void Solution::push_candidate(Vertex v) {
  if (v == kNoVertex || queued_[v]) return;
  queued_[v] = 1;
  candidates_.push_back(v);
}

std::optional<Vertex> Solution::pop_candidate() {
  if (candidates_.empty()) return std::nullopt;
  Vertex v = candidates_.front();
  candidates_.pop_front();
  queued_[v] = 0;
  return v;
}

void Solution::begin_journal() {
  journal_.clear();
  journaling_ = true;
}

void Solution::end_journal() { journaling_ = false; }

void Solution::rollback_journal() {
  journaling_ = false;
  for (auto it = journal_.rbegin(); it != journal_.rend(); ++it) {
    Vertex v = it->v;
    if (it->inserted) {
      if (in_[v] && !committed_[v]) remove(v);
    } else if (!in_[v] && !removed_[v] && tightness_[v] == 0) {
      insert(v);
    }
  }
  journal_.clear();
}

void Solution::check_consistency() const {
  std::size_t count = 0;
  for (Vertex v = 0; v < in_.size(); ++v) {
    const bool alive = g_->alive(v);
    if (!alive) require(removed_[v], "dead vertex not marked removed");
    if (in_[v]) {
      ++count;
      require(!removed_[v], [&] { return "removed vertex " + std::to_string(v) + " in solution"; });
    }
    if (!alive) continue;
    std::uint32_t tight = 0, residual = 0;
    for (Vertex x : g_->adjacency(v)) {
      if (!g_->alive(x)) continue;
      tight += in_[x] != 0;
      residual += removed_[x] == 0;
    }
    require(tight == tightness_[v], [&] { return "tightness mismatch at " + std::to_string(v); });
    if (in_[v]) require(tight == 0, [&] { return "solution not independent at " + std::to_string(v); });
    if (!removed_[v]) {
      require(residual == residual_degree_[v], [&] { return "residual degree mismatch at " + std::to_string(v); });
      require(outside_.contains(v) == !in_[v], [&] { return "outside set mismatch at " + std::to_string(v); });
      require(free_.contains(v) == (!in_[v] && tight == 0), [&] { return "free set mismatch at " + std::to_string(v); });
    } else {
      require(!free_.contains(v) && !outside_.contains(v), [&] { return "removed vertex listed at " + std::to_string(v); });
    }
    if (committed_[v]) require(in_[v], "committed vertex left the solution");
  }
  require(count == size_, "size mismatch");
}

}  // namespace fastmis
