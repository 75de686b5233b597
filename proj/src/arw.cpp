#include "fastmis/arw.hpp"

#include <algorithm>

#include "fastmis/bucket_queue.hpp"

namespace fastmis {
namespace {

void place(Solution& sol, Vertex v, bool online) {
  if (online && sol.is_residual_isolated(v)) sol.commit(v);
  else sol.insert(v);
}

}  // namespace

void greedy_fill(Solution& sol, Rng& rng, bool online_isolation) {
  const Graph& g = sol.graph();
  DegreeBuckets pool(g.id_bound());
  const auto& free = sol.free_vertices().items();
  std::vector<std::size_t> keys(free.size(), 0);
  for (std::size_t i = 0; i < free.size(); ++i)
    for (Vertex x : g.adjacency(free[i])) keys[i] += sol.is_free(x);
  for (std::size_t i = 0; i < free.size(); ++i) pool.insert(free[i], keys[i]);

  auto drop = [&](Vertex x) {
    pool.erase(x);
    for (Vertex z : g.adjacency(x))
      if (pool.contains(z)) pool.change_key(z, pool.key(z) - 1);
  };
  while (!pool.empty()) {
    Vertex v = pool.pop_random_min(rng);
    if (online_isolation && sol.is_residual_isolated(v)) {
      // Pool updates ride along the residual-degree walk inside commit.
      Vertex current = kNoVertex;
      bool pooled = false;
      sol.commit(v, [&](Vertex x, Vertex z) {
        if (x != current) {
          current = x;
          pooled = pool.contains(x);
          if (pooled) pool.erase(x);
        }
        if (pooled && pool.contains(z)) pool.change_key(z, pool.key(z) - 1);
      });
      continue;
    }
    sol.insert(v);
    for (Vertex x : g.adjacency(v))
      if (pool.contains(x)) drop(x);
  }
}

Solution greedy_initial(const Graph& g, Rng& rng) {
  Solution sol(g);
  greedy_fill(sol, rng);
  return sol;
}

void maximalize(Solution& sol, Rng& rng, bool online_isolation) {
  while (!sol.free_vertices().empty()) {
    const auto& free = sol.free_vertices();
    Vertex v = free[uniform_index(rng, free.size())];
    place(sol, v, online_isolation);
  }
}

std::optional<std::pair<Vertex, Vertex>> find_one_two_swap(const Solution& sol, Vertex v,
                                                           std::size_t pair_cap, Rng& rng) {
  require(sol.contains(v), "find_one_two_swap: vertex is not in the solution");
  const Graph& g = sol.graph();
  std::vector<Vertex> one_tight;
  for (Vertex x : g.adjacency(v))
    if (g.alive(x) && !sol.removed(x) && sol.tightness(x) == 1) one_tight.push_back(x);
  if (one_tight.size() < 2 || pair_cap == 0) return std::nullopt;

  std::vector<std::pair<Vertex, Vertex>> valid;
  for (std::size_t i = 0; i < one_tight.size() && valid.size() < pair_cap; ++i)
    for (std::size_t j = i + 1; j < one_tight.size() && valid.size() < pair_cap; ++j)
      if (!g.adjacent(one_tight[i], one_tight[j])) valid.emplace_back(one_tight[i], one_tight[j]);
  if (valid.empty()) return std::nullopt;
  if (valid.size() == 1) return valid.front();
  return valid[uniform_index(rng, valid.size())];
}

std::size_t local_search(Solution& sol, std::size_t pair_cap, Rng& rng, bool online_isolation) {
  std::size_t swaps = 0;
  while (auto v = sol.pop_candidate()) {
    if (!sol.contains(*v)) continue;
    auto swap = find_one_two_swap(sol, *v, pair_cap, rng);
    if (!swap) continue;
    sol.remove(*v);
    place(sol, swap->first, online_isolation);
    place(sol, swap->second, online_isolation);
    maximalize(sol, rng, online_isolation);
    ++swaps;
  }
  return swaps;
}

std::size_t sample_force_count(Rng& rng) {
  std::size_t i = 1;
  while (rng() & 1u) ++i;
  return i + 1;
}

std::size_t sample_perturbation_size(Rng& rng) {
  if (rng() & 1u) return 1;
  return sample_force_count(rng);
}

void perturb(Solution& sol, const PerturbationParams& params, Rng& rng, bool online_isolation) {
  const std::size_t forced = sample_perturbation_size(rng);
  for (std::size_t k = 0; k < forced; ++k) {
    const auto& outside = sol.outside();
    if (outside.empty()) break;
    Vertex pick = outside[uniform_index(rng, outside.size())];
    for (std::size_t c = 1; c < params.candidate_pool; ++c) {
      Vertex other = outside[uniform_index(rng, outside.size())];
      if (sol.last_out(other) < sol.last_out(pick)) pick = other;
    }
    std::vector<Vertex> evict;
    for (Vertex x : sol.graph().adjacency(pick))
      if (sol.contains(x)) evict.push_back(x);
    for (Vertex x : evict) sol.remove(x);
    place(sol, pick, online_isolation);
  }
  maximalize(sol, rng, online_isolation);
}

SearchOutcome run_iterated(Solution& sol, const Budget& budget, ConvergenceLog& log, Rng& rng,
                           const SearchOptions& options) {
  Stopwatch own_clock;
  const Stopwatch& clock = options.clock ? *options.clock : own_clock;
  const bool count_mode = budget.iterations.has_value();
  auto stamp = [&](std::uint64_t iteration) {
    return count_mode ? static_cast<double>(iteration) : clock.seconds();
  };
  const Graph& g = sol.graph();
  const std::size_t pair_cap = options.perturbation.pair_cap;
  const bool online = options.online_isolation;

  std::vector<char> best(g.id_bound(), 0);
  std::size_t best_size = 0;
  auto snapshot = [&] {
    std::fill(best.begin(), best.end(), 0);
    for (Vertex v = 0; v < g.id_bound(); ++v) best[v] = sol.contains(v);
    best_size = sol.size();
  };
  snapshot();
  log.record(stamp(0), best_size + options.size_offset);

  // Commits are permanent, so they are carried into the best snapshot too.
  std::size_t commits_seen = sol.commits().size();
  auto absorb_commits = [&] {
    const auto& commits = sol.commits();
    for (; commits_seen < commits.size(); ++commits_seen) {
      Vertex x = commits[commits_seen];
      if (best[x]) continue;
      for (Vertex y : g.adjacency(x))
        if (best[y]) {
          best[y] = 0;
          --best_size;
        }
      best[x] = 1;
      ++best_size;
    }
  };

  SearchOutcome outcome;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::uint64_t it = 0;; ++it) {
    if (count_mode ? it >= *budget.iterations
                   : (!budget.seconds || clock.seconds() >= *budget.seconds))
      break;
    const std::size_t start_size = sol.size();
    sol.begin_journal();
    perturb(sol, options.perturbation, rng, online);
    local_search(sol, pair_cap, rng, online);
    sol.end_journal();

    const std::size_t now = sol.size();
    if (now < start_size) {
      const double drop = static_cast<double>(start_size - now);
      const double gap = static_cast<double>(best_size > now ? best_size - now : 0);
      if (unit(rng) >= 1.0 / (1.0 + drop * gap)) {
        sol.rollback_journal();
        maximalize(sol, rng, online);
        local_search(sol, pair_cap, rng, online);
      }
    }
    absorb_commits();
    if (sol.size() > best_size) snapshot();
    log.record(stamp(it + 1), best_size + options.size_offset);
    outcome.iterations = it + 1;
  }

  for (Vertex v = 0; v < g.id_bound(); ++v)
    if (best[v]) outcome.best.push_back(v);
  return outcome;
}

}  // namespace fastmis
