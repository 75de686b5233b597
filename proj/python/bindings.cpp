#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fastmis/io.hpp"
#include "fastmis/metrics.hpp"
#include "fastmis/oracle.hpp"
#include "fastmis/pipelines.hpp"
#include "fastmis/reduce.hpp"

namespace py = pybind11;
using namespace fastmis;

namespace {

ConvergenceLog to_log(const std::vector<std::pair<double, std::size_t>>& points) {
  std::vector<LogPoint> p;
  for (auto [t, s] : points) p.push_back({t, s});
  return ConvergenceLog::from_points(std::move(p));
}

py::dict solve(const Graph& g, const std::string& algorithm, std::uint64_t seed,
               std::optional<double> time_limit, std::optional<std::uint64_t> iterations,
               double cut_fraction, std::size_t pair_cap) {
  if (time_limit && iterations) throw std::invalid_argument("give time_limit or iterations, not both");
  Budget budget = iterations ? Budget::iteration_count(*iterations)
                             : Budget::wall_clock(time_limit.value_or(10.0));
  PipelineOptions options;
  options.cut_fraction = cut_fraction;
  options.perturbation.pair_cap = pair_cap;
  Algorithm algo = parse_algorithm(algorithm);
  Rng rng(seed);
  ConvergenceLog log("", algorithm_name(algo), seed);
  std::vector<Vertex> solution;
  {
    py::gil_scoped_release release;
    solution = run_algorithm(algo, g, options, budget, rng, log);
  }
  py::list points;
  for (const auto& p : log.points()) points.append(py::make_tuple(p.elapsed, p.size));
  py::dict out;
  out["solution"] = solution;
  out["log"] = points;
  return out;
}

py::dict kernel_stats(const Graph& g, const std::string& rules) {
  KernelResult kr = kernelize(g, RuleSet::parse(rules));
  py::dict out;
  out["n"] = g.alive_count();
  out["m"] = g.edge_count();
  out["kernel_n"] = kr.reduced_n;
  out["kernel_m"] = kr.reduced_m;
  out["offset"] = kr.stack.offset();
  out["rules"] = kr.per_rule_counts;
  return out;
}

}  // namespace

PYBIND11_MODULE(_fastmis, m) {
  m.doc() = "Maximum independent set heuristics with online reductions";
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);
  py::register_exception<OracleRefusal>(m, "OracleRefusal", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def_static(
          "from_edges",
          [](std::size_t n, const std::vector<Edge>& edges) { return Graph::load(n, edges); },
          py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::alive_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("degree", &Graph::degree)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.alive_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def(
      "read_graph",
      [](const std::string& path, const std::string& format, std::optional<std::size_t> n) {
        return read_graph_file(path, parse_graph_format(format), n);
      },
      py::arg("path"), py::arg("format") = "metis", py::arg("n") = py::none());

  m.def("solve", &solve, py::arg("graph"), py::arg("algorithm") = "onlinemis", py::arg("seed") = 0,
        py::arg("time_limit") = py::none(), py::arg("iterations") = py::none(),
        py::arg("cut_fraction") = 0.01, py::arg("pair_cap") = 100);

  m.def("kernel_stats", &kernel_stats, py::arg("graph"), py::arg("rules") = "all");

  m.def(
      "exact_mis",
      [](const Graph& g, std::size_t node_limit) {
        ExactResult r = exact_mis(g, node_limit);
        return py::make_tuple(r.size, r.witness);
      },
      py::arg("graph"), py::arg("node_limit") = 40);

  m.def(
      "verify",
      [](const Graph& g, const std::vector<Vertex>& solution) {
        VerifyReport r = verify(g, solution);
        py::dict out;
        out["ok"] = r.ok();
        out["valid_ids"] = r.valid_ids;
        out["independent"] = r.independent;
        out["conflict"] = r.conflict ? py::cast(*r.conflict) : py::none();
        out["size"] = r.size;
        out["insertable"] = r.insertable;
        return out;
      },
      py::arg("graph"), py::arg("solution"));

  m.def(
      "max_speedup", [](const std::vector<std::pair<double, std::size_t>>& base,
                        const std::vector<std::pair<double, std::size_t>>& other) {
        return max_speedup(to_log(base), to_log(other));
      },
      py::arg("base"), py::arg("other"));
  m.def(
      "time_to_size",
      [](const std::vector<std::pair<double, std::size_t>>& log, std::size_t target) {
        return time_to_size(to_log(log), target);
      },
      py::arg("log"), py::arg("target"));
  m.def("quality_target", &quality_target, py::arg("quality"), py::arg("best"));
}
