#include "fastmis/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fastmis {
namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

// Splits on whitespace and parses unsigned integers; returns false on a bad token.
bool parse_numbers(const std::string& text, std::vector<std::uint64_t>& out, std::string& bad) {
  out.clear();
  std::istringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      bad = tok;
      return false;
    }
    out.push_back(value);
  }
  return true;
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

Graph read_metis(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::uint64_t> nums;
  std::string bad;

  bool have_header = false;
  std::uint64_t n = 0, m = 0;
  while (!have_header && std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '%') continue;
    if (blank(line)) continue;
    if (!parse_numbers(line, nums, bad)) fail(lineno, "non-integer token '" + bad + "' in header");
    if (nums.size() < 2 || nums.size() > 4) fail(lineno, "header must be 'n m [fmt [ncon]]'");
    if (nums.size() >= 3 && nums[2] != 0) fail(lineno, "weighted METIS graphs are not supported");
    n = nums[0];
    m = nums[1];
    have_header = true;
  }
  if (!have_header) throw ParseError("missing METIS header");
  if (n > kNoVertex) fail(lineno, "vertex count too large");

  std::vector<std::vector<Vertex>> adj(n);
  std::vector<std::size_t> defined_on(n, 0);
  std::size_t v = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '%') continue;
    if (v == n) {
      if (blank(line)) continue;
      fail(lineno, "more than " + std::to_string(n) + " vertex lines");
    }
    if (!parse_numbers(line, nums, bad)) fail(lineno, "non-integer token '" + bad + "'");
    for (std::uint64_t x : nums) {
      if (x < 1 || x > n)
        fail(lineno, "neighbor id " + std::to_string(x) + " out of range 1.." + std::to_string(n));
      if (x - 1 == v) fail(lineno, "self-loop on vertex " + std::to_string(x));
      adj[v].push_back(static_cast<Vertex>(x - 1));
    }
    std::sort(adj[v].begin(), adj[v].end());
    if (std::adjacent_find(adj[v].begin(), adj[v].end()) != adj[v].end())
      fail(lineno, "duplicate neighbor");
    defined_on[v] = lineno;
    ++v;
  }
  if (v < n) throw ParseError("expected " + std::to_string(n) + " vertex lines, found " + std::to_string(v));

  std::vector<Edge> edges;
  std::uint64_t directed = 0;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b : adj[a]) {
      ++directed;
      if (!std::binary_search(adj[b].begin(), adj[b].end(), a))
        fail(defined_on[a], "asymmetric adjacency: " + std::to_string(a + 1) + " lists " +
                                std::to_string(b + 1) + " but not the reverse");
      if (a < b) edges.emplace_back(a, b);
    }
  if (directed / 2 != m)
    throw ParseError("header declares " + std::to_string(m) + " edges but adjacency has " +
                     std::to_string(directed / 2));
  return Graph::load(n, edges);
}

Graph read_metis_file(const std::string& path) {
  auto in = open_input(path);
  return read_metis(in);
}

void write_metis(std::ostream& out, const Graph& g) {
  // Alive vertices are renumbered densely so the output is self-contained.
  Graph::Compacted c = g.compact();
  out << c.graph.alive_count() << ' ' << c.graph.edge_count() << '\n';
  for (Vertex v = 0; v < c.graph.id_bound(); ++v) {
    bool first = true;
    c.graph.for_each_live_neighbor(v, [&](Vertex u) {
      if (!first) out << ' ';
      out << u + 1;
      first = false;
    });
    out << '\n';
  }
}

Graph read_edge_list(std::istream& in, std::optional<std::size_t> n) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::uint64_t> nums;
  std::string bad;
  std::vector<Edge> edges;
  std::uint64_t max_id = 0;
  bool any = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (blank(line)) continue;
    if (!parse_numbers(line, nums, bad)) fail(lineno, "non-integer token '" + bad + "'");
    if (nums.size() != 2) fail(lineno, "expected 'u v'");
    if (nums[0] >= kNoVertex || nums[1] >= kNoVertex) fail(lineno, "vertex id too large");
    edges.emplace_back(static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1]));
    max_id = std::max({max_id, nums[0], nums[1]});
    any = true;
  }
  if (!n) {
    if (!any) throw ParseError("edge list has no edges; the vertex count must be given explicitly");
    n = max_id + 1;
  }
  return Graph::load(*n, edges);
}

Graph read_edge_list_file(const std::string& path, std::optional<std::size_t> n) {
  auto in = open_input(path);
  return read_edge_list(in, n);
}

GraphFormat parse_graph_format(const std::string& name) {
  if (name == "metis") return GraphFormat::Metis;
  if (name == "edges") return GraphFormat::EdgeList;
  throw std::invalid_argument("unknown graph format '" + name + "'");
}

Graph read_graph_file(const std::string& path, GraphFormat format, std::optional<std::size_t> n) {
  if (format == GraphFormat::Metis) return read_metis_file(path);
  return read_edge_list_file(path, n);
}

void write_solution(std::ostream& out, const std::vector<Vertex>& solution) {
  std::vector<Vertex> sorted = solution;
  std::sort(sorted.begin(), sorted.end());
  for (Vertex v : sorted) out << v << '\n';
}

void save_solution(const std::string& path, const std::vector<Vertex>& solution) {
  auto out = open_output(path);
  write_solution(out, solution);
}

std::vector<Vertex> read_solution(std::istream& in) {
  std::vector<Vertex> out;
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::uint64_t> nums;
  std::string bad;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    if (!parse_numbers(line, nums, bad)) fail(lineno, "non-integer token '" + bad + "'");
    if (nums.size() != 1) fail(lineno, "expected one vertex id");
    if (nums[0] >= kNoVertex) fail(lineno, "vertex id too large");
    out.push_back(static_cast<Vertex>(nums[0]));
  }
  return out;
}

std::vector<Vertex> load_solution(const std::string& path) {
  auto in = open_input(path);
  return read_solution(in);
}

VerifyReport verify(const Graph& g, const std::vector<Vertex>& solution) {
  VerifyReport r;
  r.size = solution.size();
  std::vector<char> in(g.id_bound(), 0);
  for (Vertex v : solution) {
    if (!g.alive(v) || in[v]) {
      r.valid_ids = false;
      continue;
    }
    in[v] = 1;
  }
  for (Vertex v : solution) {
    if (!g.alive(v)) continue;
    for (Vertex u : g.adjacency(v))
      if (g.alive(u) && in[u] && v < u) {
        r.independent = false;
        if (!r.conflict) r.conflict = Edge{v, u};
      }
  }
  for (Vertex v : g.alive_vertices()) {
    if (in[v]) continue;
    bool blocked = false;
    g.for_each_live_neighbor(v, [&](Vertex u) { blocked = blocked || in[u]; });
    r.insertable += !blocked;
  }
  return r;
}

}  // namespace fastmis
