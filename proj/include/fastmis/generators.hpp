#pragma once

#include <cstddef>

#include "fastmis/graph.hpp"

namespace fastmis::gen {

Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph star(std::size_t leaves);  // center is vertex 0
Graph complete_bipartite(std::size_t left, std::size_t right);
Graph grid(std::size_t rows, std::size_t cols);
Graph petersen();

// Erdős–Rényi G(n, p).
Graph gnp(std::size_t n, double p, Rng& rng);
// Uniform random recursive tree: vertex i > 0 attaches to a uniform earlier vertex.
Graph random_tree(std::size_t n, Rng& rng);
// Preferential attachment: each new vertex links to `links` distinct earlier
// vertices chosen proportionally to degree, seeded by a (links+1)-clique.
Graph barabasi_albert(std::size_t n, std::size_t links, Rng& rng);

}  // namespace fastmis::gen
