#include "fastmis/lp_relaxation.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace fastmis {
namespace {

constexpr std::uint32_t kUnmatched = std::numeric_limits<std::uint32_t>::max();

// Local graph over a subset of vertices, indices 0..size-1. The double cover
// of it has left copy i and right copy j adjacent whenever {i, j} is an edge.
struct LocalGraph {
  std::vector<std::uint32_t> offsets{0};
  std::vector<std::uint32_t> targets;

  std::size_t size() const { return offsets.size() - 1; }
  std::span<const std::uint32_t> neighbors(std::uint32_t i) const {
    return {targets.data() + offsets[i], targets.data() + offsets[i + 1]};
  }
};

LocalGraph build_local(const Graph& g, const std::vector<Vertex>& members,
                       const std::vector<std::uint32_t>& local_id) {
  LocalGraph lg;
  lg.offsets.reserve(members.size() + 1);
  for (Vertex v : members) {
    g.for_each_live_neighbor(v, [&](Vertex u) {
      if (local_id[u] != kUnmatched) lg.targets.push_back(local_id[u]);
    });
    lg.offsets.push_back(static_cast<std::uint32_t>(lg.targets.size()));
  }
  return lg;
}

// Hopcroft-Karp on the double cover. Returns (match_left, match_right).
struct Matching {
  std::vector<std::uint32_t> left;
  std::vector<std::uint32_t> right;
  std::size_t size = 0;
};

Matching max_matching(const LocalGraph& lg) {
  const std::size_t n = lg.size();
  Matching m{std::vector<std::uint32_t>(n, kUnmatched), std::vector<std::uint32_t>(n, kUnmatched), 0};
  std::vector<std::uint32_t> dist(n);
  std::vector<std::uint32_t> edge_cursor(n);
  std::vector<std::uint32_t> stack;
  constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

  // Greedy warm start.
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j : lg.neighbors(i))
      if (m.right[j] == kUnmatched) {
        m.left[i] = j;
        m.right[j] = i;
        ++m.size;
        break;
      }

  while (true) {
    std::queue<std::uint32_t> bfs;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (m.left[i] == kUnmatched) {
        dist[i] = 0;
        bfs.push(i);
      } else {
        dist[i] = kInf;
      }
    }
    bool found_free = false;
    while (!bfs.empty()) {
      std::uint32_t i = bfs.front();
      bfs.pop();
      for (std::uint32_t j : lg.neighbors(i)) {
        std::uint32_t next = m.right[j];
        if (next == kUnmatched) {
          found_free = true;
        } else if (dist[next] == kInf) {
          dist[next] = dist[i] + 1;
          bfs.push(next);
        }
      }
    }
    if (!found_free) break;

    std::fill(edge_cursor.begin(), edge_cursor.end(), 0);
    std::size_t augmented = 0;
    for (std::uint32_t root = 0; root < n; ++root) {
      if (m.left[root] != kUnmatched) continue;
      // Iterative layered DFS; stack holds left vertices along the path.
      stack.assign(1, root);
      while (!stack.empty()) {
        std::uint32_t i = stack.back();
        auto nbrs = lg.neighbors(i);
        bool advanced = false;
        while (edge_cursor[i] < nbrs.size()) {
          std::uint32_t j = nbrs[edge_cursor[i]];
          std::uint32_t next = m.right[j];
          if (next == kUnmatched) {
            // Augment along the stack.
            for (std::size_t k = stack.size(); k-- > 0;) {
              std::uint32_t li = stack[k];
              std::uint32_t rj = lg.neighbors(li)[edge_cursor[li]];
              m.left[li] = rj;
              m.right[rj] = li;
            }
            ++augmented;
            stack.clear();
            advanced = true;
            break;
          }
          if (dist[next] == dist[i] + 1) {
            stack.push_back(next);
            advanced = true;
            break;
          }
          ++edge_cursor[i];
        }
        if (!advanced) {
          dist[i] = kInf;  // dead end for this phase
          stack.pop_back();
          if (!stack.empty()) ++edge_cursor[stack.back()];
        }
      }
    }
    if (augmented == 0) break;
    m.size += augmented;
  }
  return m;
}

// Iterative Tarjan. Component ids come out in reverse topological order: an
// arc between different components always points to the smaller id.
std::vector<std::uint32_t> strongly_connected_components(
    std::size_t nodes, const std::vector<std::uint32_t>& offsets,
    const std::vector<std::uint32_t>& targets) {
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> index(nodes, kUnset), low(nodes), comp(nodes, kUnset);
  std::vector<std::uint32_t> cursor(nodes, 0);
  std::vector<std::uint32_t> tarjan_stack, call_stack;
  std::vector<char> on_stack(nodes, 0);
  std::uint32_t next_index = 0, next_comp = 0;

  for (std::uint32_t start = 0; start < nodes; ++start) {
    if (index[start] != kUnset) continue;
    call_stack.push_back(start);
    index[start] = low[start] = next_index++;
    tarjan_stack.push_back(start);
    on_stack[start] = 1;
    while (!call_stack.empty()) {
      std::uint32_t x = call_stack.back();
      if (offsets[x] + cursor[x] < offsets[x + 1]) {
        std::uint32_t y = targets[offsets[x] + cursor[x]++];
        if (index[y] == kUnset) {
          index[y] = low[y] = next_index++;
          tarjan_stack.push_back(y);
          on_stack[y] = 1;
          call_stack.push_back(y);
        } else if (on_stack[y]) {
          low[x] = std::min(low[x], index[y]);
        }
        continue;
      }
      call_stack.pop_back();
      if (!call_stack.empty()) low[call_stack.back()] = std::min(low[call_stack.back()], low[x]);
      if (low[x] == index[x]) {
        std::uint32_t y;
        do {
          y = tarjan_stack.back();
          tarjan_stack.pop_back();
          on_stack[y] = 0;
          comp[y] = next_comp;
        } while (y != x);
        ++next_comp;
      }
    }
  }
  return comp;
}

}  // namespace

std::size_t HalfIntegralSolution::count_with(std::uint8_t twice) const {
  return static_cast<std::size_t>(std::count(twice_value.begin(), twice_value.end(), twice));
}

HalfIntegralSolution solve_lp_relaxation(const Graph& g, bool minimize_half_part) {
  HalfIntegralSolution result;
  result.twice_value.assign(g.id_bound(), 0);

  std::vector<Vertex> members = g.alive_vertices();
  std::vector<std::uint32_t> local_id(g.id_bound(), kUnmatched);
  for (std::uint32_t i = 0; i < members.size(); ++i) local_id[members[i]] = i;

  // Phase 1: Koenig cover from one maximum matching. Z holds the copies
  // reachable from unmatched left copies along alternating paths.
  LocalGraph lg = build_local(g, members, local_id);
  Matching m = max_matching(lg);
  const std::size_t n = members.size();
  std::vector<char> left_in_z(n, 0), right_in_z(n, 0);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t i = 0; i < n; ++i)
    if (m.left[i] == kUnmatched) {
      left_in_z[i] = 1;
      queue.push_back(i);
    }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::uint32_t j : lg.neighbors(queue[head])) {
      if (right_in_z[j]) continue;
      right_in_z[j] = 1;
      std::uint32_t partner = m.right[j];
      if (partner != kUnmatched && !left_in_z[partner]) {
        left_in_z[partner] = 1;
        queue.push_back(partner);
      }
    }
  }
  // The vertex-cover value y_v counts how many of its copies are in the
  // cover (L \ Z) ∪ (R ∩ Z); x_v = 1 - y_v.
  std::vector<Vertex> half;
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint8_t cover_copies = static_cast<std::uint8_t>(!left_in_z[i]) + right_in_z[i];
    std::uint8_t twice_x = static_cast<std::uint8_t>(2 - cover_copies);
    result.twice_value[members[i]] = twice_x;
    if (twice_x == 1) half.push_back(members[i]);
  }

  if (minimize_half_part && !half.empty()) {
    // Phase 2 on the half-valued part, where all-1/2 is optimal, so the
    // double cover has a perfect matching.
    std::vector<std::uint32_t> half_id(g.id_bound(), kUnmatched);
    for (std::uint32_t i = 0; i < half.size(); ++i) half_id[half[i]] = i;
    LocalGraph hg = build_local(g, half, half_id);
    Matching pm = max_matching(hg);
    const std::size_t h = half.size();
    if (pm.size != h)
      throw std::logic_error("half-integral part lacks a perfect matching in its double cover");

    // Nodes: left copy i -> i, right copy j -> h + j.
    // Arcs: left i -> right j for every edge; right j -> its matched left.
    std::vector<std::uint32_t> offsets(2 * h + 1, 0), targets;
    targets.reserve(hg.targets.size() + h);
    for (std::uint32_t i = 0; i < h; ++i) {
      for (std::uint32_t j : hg.neighbors(i)) targets.push_back(static_cast<std::uint32_t>(h + j));
      offsets[i + 1] = static_cast<std::uint32_t>(targets.size());
    }
    for (std::uint32_t j = 0; j < h; ++j) {
      targets.push_back(pm.right[j]);
      offsets[h + j + 1] = static_cast<std::uint32_t>(targets.size());
    }
    auto comp = strongly_connected_components(2 * h, offsets, targets);

    // Closed set S = copies whose component is sink-ward of their twin copy's
    // component. Left copy in S (right not) means x = 1; right copy in S
    // means x = 0; both copies in one component stay at 1/2.
    for (std::uint32_t i = 0; i < h; ++i) {
      std::uint32_t cl = comp[i], cr = comp[h + i];
      if (cl == cr) continue;
      result.twice_value[half[i]] = cl < cr ? 2 : 0;
    }
  }

  for (Vertex v : members) result.twice_objective += result.twice_value[v];
  return result;
}

}  // namespace fastmis
