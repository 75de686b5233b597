#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fastmis {

struct LogPoint {
  double elapsed = 0.0;  // seconds, or iterations for iteration-budget runs
  std::size_t size = 0;
};

// Improvement events of a single run: elapsed is nondecreasing and size is
// strictly increasing across points.
class ConvergenceLog {
 public:
  ConvergenceLog() = default;
  ConvergenceLog(std::string instance, std::string algorithm, std::uint64_t seed)
      : instance(std::move(instance)), algorithm(std::move(algorithm)), seed(seed) {}

  // Appends (elapsed, size) when size improves on the last point; returns
  // whether a point was added. Throws ContractViolation if time runs backwards.
  bool record(double elapsed, std::size_t size);

  const std::vector<LogPoint>& points() const { return points_; }
  bool empty() const { return points_.empty(); }
  std::size_t best_size() const { return points_.empty() ? 0 : points_.back().size; }

  // Builds a log from raw points, validating the invariants.
  static ConvergenceLog from_points(std::vector<LogPoint> points);

  std::string instance;
  std::string algorithm;
  std::uint64_t seed = 0;

 private:
  std::vector<LogPoint> points_;
};

// Average of several runs' step curves, sampled at the union of their event
// times. At each time only runs that have reported at least once contribute.
struct AveragedCurve {
  std::vector<std::pair<double, double>> points;  // (elapsed, mean size)
};
AveragedCurve average_logs(const std::vector<ConvergenceLog>& logs);

// Earliest elapsed time at which the log reaches `target`, if ever.
std::optional<double> time_to_size(const ConvergenceLog& log, std::size_t target);

// max over sizes i reached by `base` of time_to_size(other, i) /
// time_to_size(base, i). Sizes `other` never reaches give +infinity.
double max_speedup(const ConvergenceLog& base, const ConvergenceLog& other);

// Smallest size counting as `quality` of `best` (ceil(quality * best)).
std::size_t quality_target(double quality, std::size_t best);

// CSV serialization:
//   # instance=<name> algorithm=<name> seed=<n>
//   elapsed_seconds,size
//   <elapsed>,<size>
void write_log_csv(std::ostream& out, const ConvergenceLog& log);
ConvergenceLog read_log_csv(std::istream& in);
void save_log(const std::string& path, const ConvergenceLog& log);
ConvergenceLog load_log(const std::string& path);

}  // namespace fastmis
