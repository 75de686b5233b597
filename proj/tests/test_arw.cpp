#include <doctest.h>

#include <map>

#include "fastmis/arw.hpp"
#include "support.hpp"

using namespace fastmis;
using testing::make;

namespace {
std::pair<Vertex, Vertex> ordered(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }
}  // namespace

TEST_CASE("greedy_initial") {
  Rng rng(1);
  Graph p3 = gen::path(3);
  Solution a = greedy_initial(p3, rng);
  CHECK(a.members() == std::vector<Vertex>{0, 2});
  Graph k4 = gen::complete(4);
  CHECK(greedy_initial(k4, rng).size() == 1);
  Graph empty = make(5, {});
  CHECK(greedy_initial(empty, rng).size() == 5);
}

TEST_CASE("insert and remove keep tightness") {
  Graph g = make(5, {{0, 1}, {0, 2}, {0, 3}});
  Solution s(g);
  s.insert(4);
  CHECK(s.size() == 1);
  for (Vertex v = 0; v < 4; ++v) CHECK(s.tightness(v) == 0);
  s.insert(0);
  for (Vertex v = 1; v < 4; ++v) CHECK(s.tightness(v) == 1);
  s.remove(0);
  for (Vertex v = 1; v < 4; ++v) CHECK(s.tightness(v) == 0);
  CHECK(s.size() == 1);
  CHECK(s.is_free(0));
  CHECK(s.last_out(0) > 0);
  s.check_consistency();
  CHECK_THROWS_AS(s.remove(0), ContractViolation);
  s.insert(1);
  CHECK_THROWS_AS(s.insert(0), ContractViolation);
}

TEST_CASE("find_one_two_swap") {
  Rng rng(2);
  SUBCASE("P5") {
    Graph g = gen::path(5);
    Solution s(g);
    s.insert(1);
    s.insert(4);
    auto swap = find_one_two_swap(s, 1, 100, rng);
    REQUIRE(swap);
    CHECK(ordered(swap->first, swap->second) == std::pair<Vertex, Vertex>{0, 2});
    // With the second and fourth vertex in, the middle one is 2-tight and
    // no swap exists anywhere.
    Solution t(g);
    t.insert(1);
    t.insert(3);
    CHECK(enumerate_swaps(g, t).empty());
    CHECK_FALSE(find_one_two_swap(t, 1, kUnlimitedPairs, rng));
    CHECK_FALSE(find_one_two_swap(t, 3, kUnlimitedPairs, rng));
  }
  SUBCASE("triangle") {
    Graph g = gen::complete(3);
    Solution s(g);
    s.insert(0);
    CHECK_FALSE(find_one_two_swap(s, 0, 100, rng));
  }
  SUBCASE("star centre, any two leaves") {
    Graph g = gen::star(4);
    Solution s(g);
    s.insert(0);
    std::size_t brute = enumerate_swaps(g, s).size();
    CHECK(brute == 6);
    std::map<std::pair<Vertex, Vertex>, int> seen;
    for (int i = 0; i < 600; ++i) {
      auto swap = find_one_two_swap(s, 0, kUnlimitedPairs, rng);
      REQUIRE(swap);
      ++seen[ordered(swap->first, swap->second)];
    }
    CHECK(seen.size() == brute);
  }
  SUBCASE("pair cap bounds the pairs considered") {
    Graph g = gen::star(30);
    Solution s(g);
    s.insert(0);
    // Cap 1 always returns the first valid pair in scan order.
    for (int i = 0; i < 20; ++i) CHECK(*find_one_two_swap(s, 0, 1, rng) == std::pair<Vertex, Vertex>{1, 2});
  }
}

TEST_CASE("local_search") {
  Rng rng(3);
  SUBCASE("P5 reaches the optimum") {
    Graph g = gen::path(5);
    Solution s(g);
    s.insert(1);
    s.insert(4);
    CHECK(local_search(s, 100, rng) == 1);
    CHECK(s.size() == 3);
    CHECK(testing::optimum(g) == 3);
  }
  SUBCASE("cliques admit no improvement") {
    Graph g = gen::complete(6);
    Solution s = greedy_initial(g, rng);
    CHECK(local_search(s, 100, rng) == 0);
  }
  SUBCASE("uncapped search ends in a (1,2)-swap local optimum") {
    for (int i = 0; i < 1000; ++i) {
      Graph g = testing::random_small(rng, 1, 12);
      Solution s = greedy_initial(g, rng);
      std::size_t before = s.size();
      local_search(s, kUnlimitedPairs, rng);
      s.check_consistency();
      CHECK(s.size() >= before);
      CHECK(s.free_vertices().empty());
      CHECK(enumerate_swaps(g, s).empty());
    }
  }
}

TEST_CASE("perturbation size") {
  Rng rng(4);
  std::map<std::size_t, int> hist;
  const int draws = 200000;
  for (int i = 0; i < draws; ++i) {
    std::size_t f = sample_force_count(rng);
    CHECK(f >= 2);
    ++hist[f];
  }
  CHECK(hist[2] / double(draws) == doctest::Approx(0.5).epsilon(0.02));
  CHECK(hist[3] / double(draws) == doctest::Approx(0.25).epsilon(0.04));
  std::size_t ones = 0;
  for (int i = 0; i < draws; ++i) {
    std::size_t f = sample_perturbation_size(rng);
    CHECK(f >= 1);
    ones += f == 1;
  }
  CHECK(ones / double(draws) == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("perturb") {
  SUBCASE("forcing an isolated vertex only gains") {
    Graph g = make(1, {});
    Solution s(g);
    Rng rng(5);
    perturb(s, {}, rng);
    CHECK(s.size() == 1);
  }
  SUBCASE("forcing the centre of a star evicts every leaf") {
    Graph g = gen::star(3);
    // Find a seed whose first draw forces a single vertex.
    std::uint64_t seed = 0;
    for (;; ++seed) {
      Rng probe(seed);
      if (sample_perturbation_size(probe) == 1) break;
    }
    Solution s(g);
    for (Vertex v = 1; v <= 3; ++v) s.insert(v);
    Rng rng(seed);
    perturb(s, {}, rng);
    // delta = 1 - 3 before re-maximalization, and nothing is free afterwards.
    CHECK(s.members() == std::vector<Vertex>{0});
  }
  SUBCASE("independence holds over many perturbations") {
    Rng rng(6);
    for (int round = 0; round < 20; ++round) {
      Graph g = gen::gnp(60, 0.08, rng);
      Solution s = greedy_initial(g, rng);
      for (int i = 0; i < 500; ++i) {
        perturb(s, {}, rng);
        local_search(s, 100, rng);
      }
      s.check_consistency();
      CHECK(testing::independent_in(g, s.members()));
    }
  }
}

TEST_CASE("run_iterated") {
  Rng rng(7);
  SUBCASE("P5 within a second") {
    Graph g = gen::path(5);
    Solution s(g);
    s.insert(1);
    s.insert(3);
    ConvergenceLog log;
    auto out = run_iterated(s, Budget::wall_clock(1.0), log, rng);
    CHECK(out.best.size() == 3);
  }
  SUBCASE("zero budget returns the input") {
    Graph g = gen::path(5);
    Solution s(g);
    s.insert(1);
    s.insert(3);
    ConvergenceLog log;
    auto out = run_iterated(s, Budget::iteration_count(0), log, rng);
    CHECK(out.best == std::vector<Vertex>{1, 3});
    CHECK(out.iterations == 0);
    REQUIRE(log.points().size() == 1);
    CHECK(log.points()[0].size == 2);
    ConvergenceLog timed;
    CHECK(run_iterated(s, Budget::wall_clock(0.0), timed, rng).best == std::vector<Vertex>{1, 3});
  }
  SUBCASE("logged sizes strictly increase") {
    Graph g = gen::gnp(300, 0.02, rng);
    Solution s = greedy_initial(g, rng);
    ConvergenceLog log;
    auto out = run_iterated(s, Budget::iteration_count(3000), log, rng);
    CHECK(out.iterations == 3000);
    for (std::size_t i = 1; i < log.points().size(); ++i) {
      CHECK(log.points()[i].size > log.points()[i - 1].size);
      CHECK(log.points()[i].elapsed >= log.points()[i - 1].elapsed);
    }
    CHECK(log.best_size() == out.best.size());
    CHECK(testing::independent_in(g, out.best));
  }
  SUBCASE("same seed and iteration budget give the same run") {
    Graph g = gen::gnp(200, 0.03, rng);
    auto run = [&](std::uint64_t seed) {
      Rng r(seed);
      Solution s = greedy_initial(g, r);
      ConvergenceLog log;
      auto out = run_iterated(s, Budget::iteration_count(500), log, r);
      return std::pair{out.best, log.points().size()};
    };
    CHECK(run(9) == run(9));
  }
}
