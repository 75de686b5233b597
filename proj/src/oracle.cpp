#include "fastmis/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace fastmis {
namespace {

using Mask = std::uint64_t;

struct BitGraph {
  std::vector<Vertex> ids;  // local -> graph id
  std::vector<Mask> adj;
};

BitGraph to_bits(const Graph& g) {
  BitGraph b;
  b.ids = g.alive_vertices();
  std::vector<std::uint32_t> local(g.id_bound(), 0);
  for (std::uint32_t i = 0; i < b.ids.size(); ++i) local[b.ids[i]] = i;
  b.adj.assign(b.ids.size(), 0);
  for (std::uint32_t i = 0; i < b.ids.size(); ++i)
    g.for_each_live_neighbor(b.ids[i], [&](Vertex u) { b.adj[i] |= Mask{1} << local[u]; });
  return b;
}

int lowest(Mask m) { return std::countr_zero(m); }

class BranchAndBound {
 public:
  explicit BranchAndBound(const BitGraph& b) : adj_(b.adj) {}

  Mask solve(Mask all) {
    best_ = greedy(all);
    best_size_ = std::popcount(best_);
    search(all, 0);
    return best_;
  }

 private:
  Mask greedy(Mask cand) const {
    Mask chosen = 0;
    while (cand) {
      int pick = -1, pick_deg = 65;
      for (Mask m = cand; m; m &= m - 1) {
        int v = lowest(m);
        int d = std::popcount(adj_[v] & cand);
        if (d < pick_deg) {
          pick = v;
          pick_deg = d;
        }
      }
      chosen |= Mask{1} << pick;
      cand &= ~(adj_[pick] | (Mask{1} << pick));
    }
    return chosen;
  }

  void search(Mask cand, Mask chosen) {
    // Take every vertex of degree <= 1 within the candidates.
    bool changed = true;
    while (changed && cand) {
      changed = false;
      for (Mask m = cand; m; m &= m - 1) {
        int v = lowest(m);
        if (std::popcount(adj_[v] & cand) <= 1) {
          chosen |= Mask{1} << v;
          cand &= ~(adj_[v] | (Mask{1} << v));
          changed = true;
          break;
        }
      }
    }
    const int current = std::popcount(chosen);
    if (!cand) {
      if (current > best_size_) {
        best_size_ = current;
        best_ = chosen;
      }
      return;
    }
    if (current + std::popcount(cand) <= best_size_) return;

    int pivot = -1, pivot_deg = -1;
    for (Mask m = cand; m; m &= m - 1) {
      int v = lowest(m);
      int d = std::popcount(adj_[v] & cand);
      if (d > pivot_deg) {
        pivot = v;
        pivot_deg = d;
      }
    }
    Mask bit = Mask{1} << pivot;
    search(cand & ~(adj_[pivot] | bit), chosen | bit);
    search(cand & ~bit, chosen);
  }

  const std::vector<Mask>& adj_;
  Mask best_ = 0;
  int best_size_ = 0;
};

ExactResult from_mask(const BitGraph& b, Mask m) {
  ExactResult r;
  for (; m; m &= m - 1) r.witness.push_back(b.ids[lowest(m)]);
  std::sort(r.witness.begin(), r.witness.end());
  r.size = r.witness.size();
  return r;
}

}  // namespace

ExactResult exact_mis(const Graph& g, std::size_t node_limit) {
  const std::size_t n = g.alive_count();
  if (n > node_limit || n > 64)
    throw OracleRefusal("exact_mis: " + std::to_string(n) + " alive vertices exceed the limit of " +
                        std::to_string(std::min<std::size_t>(node_limit, 64)));
  BitGraph b = to_bits(g);
  if (n == 0) return {};
  Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  return from_mask(b, BranchAndBound(b).solve(all));
}

ExactResult brute_force_mis(const Graph& g) {
  const std::size_t n = g.alive_count();
  if (n > 20) throw OracleRefusal("brute_force_mis handles at most 20 vertices");
  BitGraph b = to_bits(g);
  Mask best = 0;
  int best_size = -1;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    int size = std::popcount(s);
    if (size <= best_size) continue;
    bool independent = true;
    for (Mask m = s; m && independent; m &= m - 1) independent = (b.adj[lowest(m)] & s) == 0;
    if (independent) {
      best = s;
      best_size = size;
    }
  }
  return from_mask(b, best);
}

std::vector<std::tuple<Vertex, Vertex, Vertex>> enumerate_swaps(const Graph& g, const Solution& sol) {
  std::vector<std::tuple<Vertex, Vertex, Vertex>> out;
  auto solution_neighbors = [&](Vertex x) {
    std::size_t c = 0;
    for (Vertex y : g.neighbors_live(x)) c += sol.contains(y);
    return c;
  };
  for (Vertex v : g.alive_vertices()) {
    if (!sol.contains(v)) continue;
    std::vector<Vertex> nbrs = g.neighbors_live(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      Vertex u = nbrs[i];
      if (sol.removed(u) || sol.contains(u) || solution_neighbors(u) != 1) continue;
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        Vertex w = nbrs[j];
        if (sol.removed(w) || sol.contains(w) || solution_neighbors(w) != 1) continue;
        auto nu = g.neighbors_live(u);
        if (std::binary_search(nu.begin(), nu.end(), w)) continue;
        out.emplace_back(v, u, w);
      }
    }
  }
  return out;
}

}  // namespace fastmis
