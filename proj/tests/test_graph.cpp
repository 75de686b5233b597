#include <doctest.h>

#include "fastmis/bucket_queue.hpp"
#include "support.hpp"

using namespace fastmis;
using testing::make;

TEST_CASE("load drops duplicates and self-loops") {
  Graph g = make(3, {{0, 1}, {1, 0}, {1, 1}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.alive_count() == 3);
  g.check_consistency();
}

TEST_CASE("load without edges gives isolated vertices") {
  Graph g = make(2, {});
  CHECK(g.edge_count() == 0);
  CHECK(g.degree(0) == 0);
  CHECK(g.degree(1) == 0);
}

TEST_CASE("five-cycle has live degree two everywhere") {
  Graph g = gen::cycle(5);
  for (Vertex v = 0; v < 5; ++v) CHECK(g.degree(v) == 2);
}

TEST_CASE("load rejects endpoints outside the vertex range") {
  CHECK_THROWS_AS(make(2, {{0, 2}}), ParseError);
}

TEST_CASE("load is idempotent on its own edge set") {
  Rng rng(3);
  Graph g = gen::gnp(30, 0.2, rng);
  auto e = g.edges();
  Graph h = Graph::load(30, e);
  CHECK(h.edges() == e);
}

TEST_CASE("remove_vertex") {
  SUBCASE("star center") {
    Graph g = gen::star(3);
    g.remove_vertex(0);
    CHECK(g.alive_count() == 3);
    for (Vertex v = 1; v <= 3; ++v) CHECK(g.degree(v) == 0);
  }
  SUBCASE("path endpoint") {
    Graph g = gen::path(2);
    g.remove_vertex(0);
    CHECK(g.degree(1) == 0);
  }
  SUBCASE("twice is a contract violation") {
    Graph g = gen::path(2);
    g.remove_vertex(0);
    CHECK_THROWS_AS(g.remove_vertex(0), ContractViolation);
  }
}

TEST_CASE("neighbors_live") {
  Graph g = gen::complete(3);
  CHECK(g.neighbors_live(0) == std::vector<Vertex>{1, 2});
  g.remove_vertex(2);
  CHECK(g.neighbors_live(0) == std::vector<Vertex>{1});
  CHECK_THROWS_AS(g.neighbors_live(2), ContractViolation);
  Graph h = make(1, {});
  CHECK(h.neighbors_live(0).empty());
}

TEST_CASE("contract_fold") {
  SUBCASE("path u-v-w collapses to one isolated vertex") {
    Graph g = gen::path(3);
    Vertex f = g.contract_fold(1, 0, 2);
    CHECK(g.alive_count() == 1);
    CHECK(g.alive(f));
    CHECK(g.degree(f) == 0);
    g.check_consistency();
  }
  SUBCASE("P5 folded at its second vertex is adjacent to the fourth only") {
    Graph g = gen::path(5);  // v1..v5 = 0..4
    Vertex f = g.contract_fold(1, 0, 2);
    // (N(v1) ∪ N(v3)) \ {v1, v2, v3} = {v2, v4} \ {v2} = {v4}
    CHECK(g.neighbors_live(f) == std::vector<Vertex>{3});
    g.check_consistency();
  }
  SUBCASE("adjacent outer neighbors are rejected") {
    Graph g = gen::complete(3);
    CHECK_THROWS_AS(g.contract_fold(1, 0, 2), ContractViolation);
  }
}

TEST_CASE("add_gadget") {
  Graph g = make(2, {});
  Vertex a = g.add_gadget({});
  CHECK(a >= 2);
  CHECK(g.degree(a) == 0);
  std::vector<Vertex> both{0, 1};
  Vertex b = g.add_gadget(both);
  CHECK(b > a);
  CHECK(g.neighbors_live(b) == both);
  CHECK(g.degree(0) == 1);
  g.check_consistency();
  g.remove_vertex(0);
  std::vector<Vertex> dead{0};
  CHECK_THROWS_AS(g.add_gadget(dead), ContractViolation);
}

TEST_CASE("random mutation sequences keep the graph consistent") {
  Rng rng(11);
  for (int round = 0; round < 50; ++round) {
    Graph g = gen::gnp(25, 0.2, rng);
    for (int step = 0; step < 30 && g.alive_count() > 0; ++step) {
      auto alive = g.alive_vertices();
      Vertex v = alive[uniform_index(rng, alive.size())];
      switch (uniform_index(rng, 3)) {
        case 0: g.remove_vertex(v); break;
        case 1: {
          auto nb = g.neighbors_live(v);
          if (nb.size() > 3) nb.resize(3);
          g.add_gadget(nb);
          break;
        }
        default: {
          auto nb = g.neighbors_live(v);
          if (nb.size() == 2 && !g.adjacent(nb[0], nb[1])) g.contract_fold(v, nb[0], nb[1]);
          else g.remove_vertex(v);
        }
      }
      g.check_consistency();
      std::size_t degree_sum = 0;
      for (Vertex u : g.alive_vertices()) degree_sum += g.degree(u);
      CHECK(degree_sum % 2 == 0);
    }
  }
}

TEST_CASE("compact renumbers alive vertices") {
  Graph g = gen::path(5);
  g.remove_vertex(2);
  auto c = g.compact();
  CHECK(c.graph.alive_count() == 4);
  CHECK(c.graph.edge_count() == 2);
  CHECK(c.to_original == std::vector<Vertex>{0, 1, 3, 4});
  CHECK(c.to_compact[2] == kNoVertex);
}

TEST_CASE("degree buckets") {
  DegreeBuckets q(6);
  q.insert(0, 3);
  q.insert(1, 1);
  q.insert(2, 3);
  q.insert(3, 0);
  CHECK(q.min_key() == 0);
  CHECK(q.max_key() == 3);
  q.change_key(3, 5);
  CHECK(q.max_key() == 5);
  Rng rng(1);
  CHECK(q.pop_random_max(rng) == 3);
  CHECK(q.pop_random_min(rng) == 1);
  Vertex top = q.pop_random_max(rng);
  CHECK((top == 0 || top == 2));
  CHECK(q.size() == 1);
}
