#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "fastmis/metrics.hpp"
#include "fastmis/solution.hpp"

namespace fastmis {

inline constexpr std::size_t kUnlimitedPairs = std::numeric_limits<std::size_t>::max();

struct PerturbationParams {
  // Random outside vertices sampled per forced insertion; the one out of the
  // solution the longest wins.
  std::size_t candidate_pool = 4;
  // Valid (u, w) pairs examined per (1,2)-swap search.
  std::size_t pair_cap = 100;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Stopping rule for iterated search. With an iteration budget the run is
// reproducible and log times count iterations instead of seconds.
struct Budget {
  std::optional<double> seconds;
  std::optional<std::uint64_t> iterations;

  static Budget wall_clock(double s) { return {s, std::nullopt}; }
  static Budget iteration_count(std::uint64_t n) { return {std::nullopt, n}; }
};

struct SearchOptions {
  PerturbationParams perturbation;
  // Commit vertices that are isolated in the residual graph whenever they are
  // about to be inserted.
  bool online_isolation = false;
  // Added to solution sizes before logging (vertices fixed outside the search).
  std::size_t size_offset = 0;
  // Time origin for log entries; a private stopwatch is used when null.
  const Stopwatch* clock = nullptr;
};

struct SearchOutcome {
  std::vector<Vertex> best;  // sorted
  std::uint64_t iterations = 0;
};

// Min-degree greedy: repeatedly inserts a free vertex of minimum degree among
// the remaining free vertices (ties at random), dropping its neighbors.
Solution greedy_initial(const Graph& g, Rng& rng);
void greedy_fill(Solution& sol, Rng& rng, bool online_isolation = false);

// Inserts every free vertex, in random order, until the solution is maximal.
void maximalize(Solution& sol, Rng& rng, bool online_isolation = false);

// Two non-adjacent neighbors of solution vertex v whose only solution
// neighbor is v. Up to pair_cap valid pairs are collected; one of them is
// returned uniformly at random.
std::optional<std::pair<Vertex, Vertex>> find_one_two_swap(const Solution& sol, Vertex v,
                                                           std::size_t pair_cap, Rng& rng);

// Applies (1,2)-swaps from the candidate queue until it empties. The
// solution must be maximal; it stays maximal. Returns the number of swaps.
std::size_t local_search(Solution& sol, std::size_t pair_cap, Rng& rng, bool online_isolation = false);

// f = i + 1 with probability 2^-i for i >= 1.
std::size_t sample_force_count(Rng& rng);
// Vertices forced per perturbation: 1 with probability 1/2, otherwise
// sample_force_count.
std::size_t sample_perturbation_size(Rng& rng);

// Forces sample_perturbation_size vertices into the solution, evicting their
// solution neighbors, then re-maximalizes.
void perturb(Solution& sol, const PerturbationParams& params, Rng& rng, bool online_isolation = false);

// Iterated local search: perturbation + local search per iteration until the
// budget runs out. A worse result than the iteration's start is kept with
// probability 1 / (1 + d * d_best) and rolled back otherwise. Every strict
// improvement of the best size is appended to `log`.
SearchOutcome run_iterated(Solution& sol, const Budget& budget, ConvergenceLog& log, Rng& rng,
                           const SearchOptions& options = {});

}  // namespace fastmis
