#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fastmis/graph.hpp"

namespace fastmis {

// METIS: optional `%` comment lines, header `n m [fmt]`, then one line per
// vertex listing its 1-indexed neighbors. Errors name the offending line.
// Only unweighted graphs (fmt absent or 0) are accepted.
Graph read_metis(std::istream& in);
Graph read_metis_file(const std::string& path);
void write_metis(std::ostream& out, const Graph& g);

// `u v` per line, 0-indexed, `#` comments. n defaults to max id + 1; an input
// without edges needs an explicit n.
Graph read_edge_list(std::istream& in, std::optional<std::size_t> n = std::nullopt);
Graph read_edge_list_file(const std::string& path, std::optional<std::size_t> n = std::nullopt);

enum class GraphFormat { Metis, EdgeList };
GraphFormat parse_graph_format(const std::string& name);  // "metis" | "edges"
Graph read_graph_file(const std::string& path, GraphFormat format,
                      std::optional<std::size_t> n = std::nullopt);

// One 0-indexed vertex id per line, ascending.
void write_solution(std::ostream& out, const std::vector<Vertex>& solution);
void save_solution(const std::string& path, const std::vector<Vertex>& solution);
std::vector<Vertex> read_solution(std::istream& in);
std::vector<Vertex> load_solution(const std::string& path);

struct VerifyReport {
  bool valid_ids = true;      // every id names a vertex, no repeats
  bool independent = true;
  std::optional<Edge> conflict;  // first adjacent pair found
  std::size_t size = 0;
  // Vertices that could still be added. Non-zero is expected after inexact
  // cutting and is reported, not treated as a failure.
  std::size_t insertable = 0;
  bool ok() const { return valid_ids && independent; }
};
VerifyReport verify(const Graph& g, const std::vector<Vertex>& solution);

}  // namespace fastmis
