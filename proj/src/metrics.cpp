#include "fastmis/metrics.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "fastmis/types.hpp"

namespace fastmis {

bool ConvergenceLog::record(double elapsed, std::size_t size) {
  require(elapsed >= 0.0, "log times must be non-negative");
  if (!points_.empty()) {
    require(elapsed >= points_.back().elapsed, "log times must be nondecreasing");
    if (size <= points_.back().size) return false;
  }
  points_.push_back({elapsed, size});
  return true;
}

ConvergenceLog ConvergenceLog::from_points(std::vector<LogPoint> points) {
  ConvergenceLog log;
  for (const auto& p : points) {
    if (!log.points_.empty())
      require(p.size > log.points_.back().size, "log sizes must be strictly increasing");
    log.record(p.elapsed, p.size);
  }
  return log;
}

namespace {
// Size of the step curve at time t, or nullopt before the first point.
std::optional<std::size_t> value_at(const ConvergenceLog& log, double t) {
  const auto& pts = log.points();
  auto it = std::upper_bound(pts.begin(), pts.end(), t,
                             [](double time, const LogPoint& p) { return time < p.elapsed; });
  if (it == pts.begin()) return std::nullopt;
  return std::prev(it)->size;
}
}  // namespace

AveragedCurve average_logs(const std::vector<ConvergenceLog>& logs) {
  require(!logs.empty(), "average_logs needs at least one log");
  std::vector<double> times;
  for (const auto& log : logs)
    for (const auto& p : log.points()) times.push_back(p.elapsed);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());

  AveragedCurve curve;
  for (double t : times) {
    double sum = 0.0;
    std::size_t reporting = 0;
    for (const auto& log : logs)
      if (auto v = value_at(log, t)) {
        sum += static_cast<double>(*v);
        ++reporting;
      }
    curve.points.emplace_back(t, sum / static_cast<double>(reporting));
  }
  return curve;
}

std::optional<double> time_to_size(const ConvergenceLog& log, std::size_t target) {
  const auto& pts = log.points();
  auto it = std::lower_bound(pts.begin(), pts.end(), target,
                             [](const LogPoint& p, std::size_t s) { return p.size < s; });
  if (it == pts.end()) return std::nullopt;
  return it->elapsed;
}

double max_speedup(const ConvergenceLog& base, const ConvergenceLog& other) {
  // Both step functions are constant on (s_{k-1}, s_k], so evaluating at every
  // breakpoint up to base's best size covers every piece of the ratio.
  std::vector<std::size_t> sizes;
  for (const auto& p : base.points()) sizes.push_back(p.size);
  for (const auto& p : other.points())
    if (p.size <= base.best_size()) sizes.push_back(p.size);
  double best = 0.0;
  bool any = false;
  for (std::size_t i : sizes) {
    auto tb = time_to_size(base, i);
    auto to = time_to_size(other, i);
    double ratio;
    if (!to) ratio = std::numeric_limits<double>::infinity();
    else if (*tb == 0.0) ratio = *to == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    else ratio = *to / *tb;
    best = any ? std::max(best, ratio) : ratio;
    any = true;
  }
  return any ? best : 1.0;
}

std::size_t quality_target(double quality, std::size_t best) {
  double exact = quality * static_cast<double>(best);
  return static_cast<std::size_t>(std::ceil(exact - 1e-9 * std::max(1.0, exact)));
}

void write_log_csv(std::ostream& out, const ConvergenceLog& log) {
  out << "# instance=" << (log.instance.empty() ? "-" : log.instance)
      << " algorithm=" << (log.algorithm.empty() ? "-" : log.algorithm) << " seed=" << log.seed << '\n';
  out << "elapsed_seconds,size\n";
  char buf[64];
  for (const auto& p : log.points()) {
    std::snprintf(buf, sizeof buf, "%.6f,%zu\n", p.elapsed, p.size);
    out << buf;
  }
}

ConvergenceLog read_log_csv(std::istream& in) {
  std::vector<LogPoint> points;
  std::string instance, algorithm;
  std::uint64_t seed = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream ss(line.substr(1));
      std::string field;
      while (ss >> field) {
        auto eq = field.find('=');
        if (eq == std::string::npos) continue;
        std::string key = field.substr(0, eq), value = field.substr(eq + 1);
        if (key == "instance") instance = value;
        else if (key == "algorithm") algorithm = value;
        else if (key == "seed") seed = std::stoull(value);
      }
      continue;
    }
    if (line == "elapsed_seconds,size") continue;
    auto comma = line.find(',');
    if (comma == std::string::npos)
      throw ParseError("log line " + std::to_string(line_no) + ": expected 'elapsed,size'");
    try {
      std::size_t used = 0;
      double t = std::stod(line.substr(0, comma), &used);
      std::string size_text = line.substr(comma + 1);
      std::size_t used2 = 0;
      unsigned long long s = std::stoull(size_text, &used2);
      if (used != comma || used2 != size_text.size()) throw std::invalid_argument("trailing");
      points.push_back({t, static_cast<std::size_t>(s)});
    } catch (const std::logic_error&) {
      throw ParseError("log line " + std::to_string(line_no) + ": malformed '" + line + "'");
    }
  }
  ConvergenceLog log;
  try {
    log = ConvergenceLog::from_points(std::move(points));
  } catch (const ContractViolation& e) {
    throw ParseError(std::string("log violates its invariants: ") + e.what());
  }
  log.instance = instance;
  log.algorithm = algorithm;
  log.seed = seed;
  return log;
}

void save_log(const std::string& path, const ConvergenceLog& log) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write log file " + path);
  write_log_csv(out, log);
}

ConvergenceLog load_log(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read log file " + path);
  return read_log_csv(in);
}

}  // namespace fastmis
