// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 criteria 1-8
//   acceptance --only 9        the scale-free trend check (about ten minutes)

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <unistd.h>

#include "fastmis/arw.hpp"
#include "fastmis/cli.hpp"
#include "fastmis/cut.hpp"
#include "fastmis/io.hpp"
#include "fastmis/pipelines.hpp"
#include "fastmis/reduce.hpp"
#include "support.hpp"

using namespace fastmis;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// 1. Kernelization preserves the optimum for every rule subset.
Verdict kernel_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(1001);
  const int graphs = 10000;
  std::size_t runs = 0, mismatches = 0, dependent = 0;
  std::string first_failure;
  for (int i = 0; i < graphs; ++i) {
    Graph input = testing::random_small(rng, 1, 16);
    const std::size_t best = testing::optimum(input);
    for (unsigned mask = 0; mask < (1u << kRuleCount); ++mask) {
      KernelResult kr = kernelize(input, RuleSet(mask));
      auto lifted = lift_solution(kr, exact_mis(kr.kernel, 64).witness);
      ++runs;
      if (!testing::independent_in(input, lifted)) ++dependent;
      if (lifted.size() != best) {
        ++mismatches;
        if (first_failure.empty())
          first_failure = " first: graph " + std::to_string(i) + " mask " + std::to_string(mask);
      }
    }
  }
  const double elapsed = seconds_since(t0);
  Verdict v;
  v.pass = mismatches == 0 && dependent == 0 && elapsed < 300.0;
  v.detail = std::to_string(graphs) + " graphs x " + std::to_string(1u << kRuleCount) +
             " rule subsets = " + std::to_string(runs) + " runs, " + std::to_string(mismatches) +
             " optimum mismatches, " + std::to_string(dependent) + " dependent lifts, " +
             fmt("%.1f s", elapsed) + first_failure;
  return v;
}

// 2. Pipelines reach the optimum on small graphs.
Verdict pipeline_equivalence() {
  Rng rng(2002);
  const int instances = 1000;
  const int seeds = 3;
  const std::uint64_t iterations = 10000;
  PipelineOptions opts;
  opts.cut_fraction = 0.0;
  const Algorithm algos[] = {Algorithm::KerMis, Algorithm::Arw, Algorithm::OnlineMis};
  std::map<Algorithm, std::size_t> hits;
  std::size_t dependent = 0;
  for (int i = 0; i < instances; ++i) {
    Graph g = testing::random_small(rng, 1, 16);
    const std::size_t best = testing::optimum(g);
    for (Algorithm a : algos)
      for (int s = 0; s < seeds; ++s) {
        Rng r(static_cast<std::uint64_t>(i) * 7919 + s);
        ConvergenceLog log;
        auto sol = run_algorithm(a, g, opts, Budget::iteration_count(iterations), r, log);
        if (!testing::independent_in(g, sol)) ++dependent;
        hits[a] += sol.size() == best;
      }
  }
  Verdict v;
  v.pass = dependent == 0;
  std::ostringstream d;
  d << instances << " graphs x " << seeds << " seeds, " << iterations << " iterations:";
  for (Algorithm a : algos) {
    double rate = static_cast<double>(hits[a]) / (instances * seeds);
    v.pass = v.pass && rate >= 0.95;
    d << ' ' << algorithm_name(a) << ' ' << fmt("%.4f", rate);
  }
  d << ", " << dependent << " dependent outputs";
  v.detail = d.str();
  return v;
}

// 3. Uncapped local search ends in a (1,2)-swap local optimum.
Verdict local_optimum() {
  Rng rng(3003);
  const int instances = 20000;
  std::size_t checked = 0, violations = 0;
  for (int i = 0; i < instances; ++i) {
    Graph g = testing::random_small(rng, 1, 12);
    Solution s = greedy_initial(g, rng);
    for (int round = 0; round < 3; ++round) {
      local_search(s, kUnlimitedPairs, rng);
      ++checked;
      violations += !enumerate_swaps(g, s).empty() || !s.free_vertices().empty();
      perturb(s, {}, rng);
    }
  }
  return {violations == 0, std::to_string(checked) + " post-search states on " + std::to_string(instances) +
                               " graphs (n <= 12), " + std::to_string(violations) + " with a remaining swap"};
}

// 4. Randomized operation sequences never break an invariant.
Verdict invariants() {
  Rng rng(4004);
  std::size_t graph_steps = 0, solution_steps = 0, log_steps = 0, violations = 0;
  auto guarded = [&](const std::function<void()>& check) {
    try {
      check();
    } catch (const ContractViolation&) {
      ++violations;
    }
  };

  while (graph_steps < 100000) {
    Graph g = gen::gnp(40, 0.1, rng);
    for (int step = 0; step < 60 && g.alive_count() > 2; ++step, ++graph_steps) {
      auto alive = g.alive_vertices();
      Vertex v = alive[uniform_index(rng, alive.size())];
      Vertex w = alive[uniform_index(rng, alive.size())];
      switch (uniform_index(rng, 4)) {
        case 0: g.remove_vertex(v); break;
        case 1: {
          auto nb = g.neighbors_live(v);
          nb.resize(std::min<std::size_t>(nb.size(), 3));
          g.add_gadget(nb);
          break;
        }
        case 2: {
          auto nb = g.neighbors_live(v);
          if (nb.size() == 2 && !g.adjacent(nb[0], nb[1])) g.contract_fold(v, nb[0], nb[1]);
          break;
        }
        default:
          if (v != w) g.add_edge(v, w);
      }
      guarded([&] { g.check_consistency(); });
      std::size_t sum = 0;
      for (Vertex u : g.alive_vertices()) sum += g.degree(u);
      violations += sum % 2 != 0;
    }
  }

  while (solution_steps < 100000) {
    Graph g = gen::gnp(50, 0.08, rng);
    Solution s(g);
    ConvergenceLog log;
    std::size_t best = 0;
    for (int step = 0; step < 200; ++step, ++solution_steps) {
      Vertex v = static_cast<Vertex>(uniform_index(rng, g.id_bound()));
      switch (uniform_index(rng, 7)) {
        case 0:
          if (s.is_free(v)) s.insert(v);
          break;
        case 1:
          if (s.contains(v) && !s.committed(v)) s.remove(v);
          break;
        case 2: maximalize(s, rng); break;
        case 3:
          maximalize(s, rng);
          local_search(s, 100, rng);
          break;
        case 4:
          maximalize(s, rng);
          perturb(s, {}, rng);
          break;
        case 5:
          if (s.is_free(v) && s.is_residual_isolated(v)) s.commit(v);
          break;
        default:
          if (!s.contains(v) && !s.removed(v) && uniform_index(rng, 4) == 0) s.mark_removed(v);
      }
      guarded([&] { s.check_consistency(); });
      violations += !testing::independent_in(g, s.members());
      best = std::max(best, s.size());
      log.record(step, best);
      ++log_steps;
      for (std::size_t i = 1; i < log.points().size(); ++i)
        violations += log.points()[i].size <= log.points()[i - 1].size ||
                      log.points()[i].elapsed < log.points()[i - 1].elapsed;
    }
  }
  return {violations == 0, std::to_string(graph_steps) + " graph steps, " + std::to_string(solution_steps) +
                               " solution steps, " + std::to_string(log_steps) + " log steps, " +
                               std::to_string(violations) + " violations"};
}

// 5. Empirical perturbation sizes match the implemented schedule.
Verdict perturbation_distribution() {
  Rng rng(5005);
  const int draws = 1000000;
  std::map<std::size_t, int> per_iteration, escalated;
  for (int i = 0; i < draws; ++i) {
    ++per_iteration[sample_perturbation_size(rng)];
    ++escalated[sample_force_count(rng)];
  }
  double worst = 0.0;
  std::ostringstream d;
  // Per iteration: f = 1 w.p. 1/2, f = i + 1 w.p. 2^-(i+1).
  for (std::size_t f = 1; f <= 8; ++f) {
    double expected = f == 1 ? 0.5 : std::ldexp(1.0, -static_cast<int>(f));
    double got = per_iteration[f] / double(draws);
    worst = std::max(worst, std::abs(got - expected));
    if (f <= 3) d << "P(f=" << f << ")=" << fmt("%.4f", got) << ' ';
  }
  // Escalated draw: f = i + 1 w.p. 2^-i.
  for (std::size_t f = 2; f <= 9; ++f) {
    double expected = std::ldexp(1.0, -static_cast<int>(f - 1));
    double got = escalated[f] / double(draws);
    worst = std::max(worst, std::abs(got - expected));
    if (f <= 3) d << "escalated P(f=" << f << ")=" << fmt("%.4f", got) << ' ';
  }
  worst = std::max(worst, double(escalated[0] + escalated[1] + per_iteration[0]));
  d << "max deviation " << fmt("%.4f", worst);
  return {worst <= 0.01, d.str()};
}

// 6. Relative cutting removes exactly ceil(fraction * n), always at max degree.
Verdict cutting_counts() {
  Rng rng(6006);
  std::size_t runs = 0, count_errors = 0, replay_errors = 0;
  const double fractions[] = {0.0, 0.001, 0.01, 0.05, 0.1, 1.0 / 3.0, 0.5, 1.0};
  for (int i = 0; i < 300; ++i) {
    Graph g = i % 2 ? gen::barabasi_albert(200 + uniform_index(rng, 300), 1 + uniform_index(rng, 4), rng)
                    : gen::gnp(100 + uniform_index(rng, 200), 0.03, rng);
    for (double f : fractions) {
      Graph work = g;
      auto removed = cut_relative(work, f, rng);
      ++runs;
      const auto expected = static_cast<std::size_t>(std::ceil(f * g.alive_count() - 1e-9));
      count_errors += removed.size() != expected;
      Graph replay = g;
      for (Vertex v : removed) {
        std::size_t max_degree = 0;
        for (Vertex u : replay.alive_vertices()) max_degree = std::max(max_degree, replay.degree(u));
        replay_errors += replay.degree(v) != max_degree;
        replay.remove_vertex(v);
      }
    }
  }
  return {count_errors == 0 && replay_errors == 0,
          std::to_string(runs) + " cuts, " + std::to_string(count_errors) + " count errors, " +
              std::to_string(replay_errors) + " non-maximum removals"};
}

// 7. Metrics worked examples and self-speedup.
Verdict metrics_examples() {
  auto log = [](std::vector<LogPoint> p) { return ConvergenceLog::from_points(std::move(p)); };
  std::vector<std::string> failed;
  auto expect = [&](bool ok, const char* what) {
    if (!ok) failed.push_back(what);
  };
  auto l = log({{1, 5}, {3, 9}});
  expect(time_to_size(l, 9) == 3.0, "time_to_size target 9");
  expect(!time_to_size(l, 10), "time_to_size target 10");
  expect(time_to_size(l, 0) == 1.0, "time_to_size target 0");
  expect(max_speedup(log({{1, 10}}), log({{5, 10}})) == 5.0, "speedup 5");
  expect(std::isinf(max_speedup(log({{1, 10}}), log({{5, 9}}))), "infinite speedup");
  auto x = log({{0.5, 3}, {2, 7}});
  expect(max_speedup(x, x) == 1.0, "speedup of a log with itself");

  Rng rng(7007);
  int self_ok = 0;
  for (int i = 0; i < 100; ++i) {
    ConvergenceLog r;
    double t = 0;
    std::size_t s = uniform_index(rng, 10);
    for (int k = 0, n = 1 + uniform_index(rng, 20); k < n; ++k) {
      t += std::uniform_real_distribution<double>(0.0, 5.0)(rng);
      s += 1 + uniform_index(rng, 50);
      r.record(t, s);
    }
    self_ok += max_speedup(r, r) == 1.0;
  }
  expect(self_ok == 100, "self-speedup on random logs");
  std::string d = "6 worked examples, " + std::to_string(self_ok) + "/100 random self-speedups = 1";
  for (const auto& f : failed) d += "; failed: " + f;
  return {failed.empty(), d};
}

// 8. Same seed and iteration budget give byte-identical output files.
Verdict determinism() {
  const fs::path dir = fs::temp_directory_path() / ("fastmis_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  Rng rng(8008);
  const char* algos[] = {"onlinemis", "kermis", "arw", "kernel"};
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  int identical = 0, failures = 0;
  for (int i = 0; i < 20; ++i) {
    Graph g = i % 3 == 0 ? gen::barabasi_albert(3000, 2, rng)
            : i % 3 == 1 ? gen::gnp(1500, 0.004, rng)
                         : gen::grid(30, 40);
    const fs::path graph = dir / ("g" + std::to_string(i) + ".metis");
    {
      std::ofstream out(graph);
      write_metis(out, g);
    }
    std::string outputs[2][2];
    for (int run = 0; run < 2; ++run) {
      const fs::path sol = dir / ("s" + std::to_string(run));
      const fs::path lg = dir / ("l" + std::to_string(run));
      std::vector<std::string> args = {"fastmis", "solve", "--algo", algos[i % 4], "--graph", graph.string(),
                                       "--seed", std::to_string(100 + i), "--iterations", "3000",
                                       "--solution", sol.string(), "--log", lg.string()};
      std::vector<const char*> argv;
      for (auto& a : args) argv.push_back(a.c_str());
      std::ostringstream out, err;
      if (run_cli(static_cast<int>(argv.size()), argv.data(), out, err) != 0) ++failures;
      outputs[run][0] = slurp(sol);
      outputs[run][1] = slurp(lg);
    }
    identical += outputs[0][0] == outputs[1][0] && outputs[0][1] == outputs[1][1] && !outputs[0][0].empty();
  }
  fs::remove_all(dir);
  return {identical == 20 && failures == 0,
          std::to_string(identical) + "/20 instances byte-identical, " + std::to_string(failures) + " failed solves"};
}

// 9. OnlineMIS reaches 99.5% of the best size sooner than plain ARW.
Verdict scale_free_trend(double budget_seconds, int seeds, std::size_t n, std::size_t links) {
  int wins = 0;
  std::ostringstream d;
  d << "BA n=" << n << " links=" << links << ", " << budget_seconds << " s per run:";
  for (int s = 0; s < seeds; ++s) {
    Rng gen_rng(9000 + s);
    Graph g = gen::barabasi_albert(n, links, gen_rng);
    PipelineOptions opts;
    ConvergenceLog online, arw;
    Rng r1(s), r2(s);
    // Alternate which algorithm runs first so neither always meets a cold cache.
    std::vector<Vertex> a, b;
    auto run_online = [&] { a = online_mis(g, opts, Budget::wall_clock(budget_seconds), r1, online); };
    auto run_arw = [&] { b = plain_arw(g, opts, Budget::wall_clock(budget_seconds), r2, arw); };
    if (s % 2 == 0) {
      run_online();
      run_arw();
    } else {
      run_arw();
      run_online();
    }
    const std::size_t best = std::max(a.size(), b.size());
    const std::size_t target = quality_target(0.995, best);
    auto t_online = time_to_size(online, target);
    auto t_arw = time_to_size(arw, target);
    const bool win = t_online && (!t_arw || *t_online < *t_arw);
    wins += win;
    d << " [seed " << s << ": best " << best << ", onlinemis " << (t_online ? fmt("%.4f", *t_online) : "-")
      << " s (size " << a.size() << "), arw " << (t_arw ? fmt("%.4f", *t_arw) : "-") << " s (size "
      << b.size() << ")]";
  }
  d << " -> onlinemis faster on " << wins << "/" << seeds;
  return {2 * wins > seeds, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> only;
  double budget = 60.0;
  int seeds = 5;
  std::size_t n = 100000, links = 3;
  app.add_option("--only", only, "criteria to run (default 1-8)");
  app.add_option("--budget", budget, "seconds per run for criterion 9");
  app.add_option("--seeds", seeds, "seeds for criterion 9");
  app.add_option("--n", n, "vertices for criterion 9");
  app.add_option("--links", links, "attachment links per vertex for criterion 9");
  CLI11_PARSE(app, argc, argv);
  if (only.empty()) only = {1, 2, 3, 4, 5, 6, 7, 8};

  const std::map<int, std::pair<const char*, std::function<Verdict()>>> criteria = {
      {1, {"kernelization oracle equivalence", kernel_equivalence}},
      {2, {"pipeline oracle equivalence", pipeline_equivalence}},
      {3, {"local-optimum soundness", local_optimum}},
      {4, {"invariant suite", invariants}},
      {5, {"perturbation distribution", perturbation_distribution}},
      {6, {"cutting counts", cutting_counts}},
      {7, {"metrics", metrics_examples}},
      {8, {"determinism", determinism}},
      {9, {"scale-free trend", [&] { return scale_free_trend(budget, seeds, n, links); }}},
  };
  bool all = true;
  for (int id : only) {
    auto it = criteria.find(id);
    if (it == criteria.end()) {
      std::cerr << "unknown criterion " << id << '\n';
      return 2;
    }
    Verdict v;
    try {
      v = it->second.second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    all = all && v.pass;
    std::cout << "criterion " << id << " (" << it->second.first << "): " << (v.pass ? "PASS" : "FAIL")
              << " - " << v.detail << std::endl;
  }
  return all ? 0 : 1;
}
