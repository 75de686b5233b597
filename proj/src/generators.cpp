#include "fastmis/generators.hpp"

#include <algorithm>
#include <vector>

namespace fastmis::gen {

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 1; i < n; ++i) e.emplace_back(i - 1, i);
  return Graph::load(n, e);
}

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph::load(n, e);
}

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::load(n, e);
}

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::load(leaves + 1, e);
}

Graph complete_bipartite(std::size_t left, std::size_t right) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < left; ++i)
    for (Vertex j = 0; j < right; ++j) e.emplace_back(i, static_cast<Vertex>(left + j));
  return Graph::load(left + right, e);
}

Graph grid(std::size_t rows, std::size_t cols) {
  std::vector<Edge> e;
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph::load(rows * cols, e);
}

Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return Graph::load(10, e);
}

Graph gnp(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph::load(n, e);
}

Graph random_tree(std::size_t n, Rng& rng) {
  std::vector<Edge> e;
  for (Vertex i = 1; i < n; ++i) e.emplace_back(static_cast<Vertex>(uniform_index(rng, i)), i);
  return Graph::load(n, e);
}

Graph barabasi_albert(std::size_t n, std::size_t links, Rng& rng) {
  require(links >= 1, "barabasi_albert: links must be positive");
  const std::size_t seed = std::min(n, links + 1);
  std::vector<Edge> e;
  // Every edge endpoint appears once here, so a uniform pick is degree-proportional.
  std::vector<Vertex> endpoints;
  for (Vertex i = 0; i < seed; ++i)
    for (Vertex j = i + 1; j < seed; ++j) {
      e.emplace_back(i, j);
      endpoints.push_back(i);
      endpoints.push_back(j);
    }
  std::vector<Vertex> targets;
  for (Vertex v = static_cast<Vertex>(seed); v < n; ++v) {
    targets.clear();
    while (targets.size() < links) {
      Vertex t = endpoints[uniform_index(rng, endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (Vertex t : targets) {
      e.emplace_back(t, v);
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return Graph::load(n, e);
}

}  // namespace fastmis::gen
