#include "doctest.h"

#include <random>

#include "brickwork/errors.hpp"
#include "brickwork/matching.hpp"
#include "brickwork/named.hpp"

using namespace brickwork;

TEST_CASE("max_matching sizes") {
  CHECK(max_matching(complete_graph(4)).size() == 2);
  CHECK(max_matching(cycle_graph(5)).size() == 2);
  CHECK(max_matching(odd_wheel(5)).size() == 3);
  CHECK(max_matching_exhaustive(odd_wheel(5)).size() == 3);
  CHECK(max_matching(MultiGraph(1)).empty());
}

TEST_CASE("blossom agrees with exhaustive search on random graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    MultiGraph g(n);
    std::bernoulli_distribution coin(0.3);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) g.add_edge(u, v);
      }
    }
    const Matching a = max_matching(g);
    const Matching b = max_matching_exhaustive(g);
    REQUIRE(a.size() == b.size());
    std::vector<int> hit(n, 0);
    for (EdgeId id : a) {
      ++hit[g.edge(id).u];
      ++hit[g.edge(id).v];
    }
    CHECK(std::all_of(hit.begin(), hit.end(), [](int h) { return h <= 1; }));
    CHECK(has_perfect_matching(g) == satisfies_tutte_condition(g));
  }
}

TEST_CASE("perfect matching enumeration") {
  CHECK(enumerate_perfect_matchings(odd_wheel(5), 100).size() == 5);
  CHECK(enumerate_perfect_matchings(complete_graph(4), 100).size() == 3);
  CHECK(enumerate_perfect_matchings(cycle_graph(5), 100).empty());
  CHECK_THROWS_AS(enumerate_perfect_matchings(complete_graph(8), 10), BudgetExceeded);
  // Parallel copies are distinct matchings.
  CHECK(enumerate_perfect_matchings(add_parallel(complete_graph(4), 0), 100).size() == 4);
}

TEST_CASE("odd components") {
  const MultiGraph k4 = complete_graph(4);
  CHECK(odd_components(k4, VertexSet::of(4, {0})) == 1);
  const MultiGraph w5 = odd_wheel(5);
  // Rim minus two nonadjacent vertices leaves a singleton and an edge.
  CHECK(odd_components(w5, VertexSet::of(6, {5, 0, 2})) == 1);
  CHECK(odd_components(cycle_graph(5), VertexSet::none(5)) == 1);
}

TEST_CASE("forbidden edges and barriers") {
  const MultiGraph k4 = complete_graph(4);
  for (const Edge& e : k4.edges()) {
    CHECK_FALSE(is_forbidden(k4, e.id));
    CHECK_FALSE(find_barrier_containing(k4, e.u, e.v));
  }
  const MultiGraph p4 = path_graph(4);
  CHECK(is_forbidden(p4, 1));
  CHECK_FALSE(is_forbidden(p4, 0));
  auto barrier = find_barrier_containing(p4, 1, 2);
  REQUIRE(barrier);
  CHECK(*barrier == VertexSet::of(4, {1, 2}));

  // W7 minus a spoke: the freed rim vertex has degree 2 and its rim
  // neighbours form a barrier.
  MultiGraph w7 = odd_wheel(7);
  const MultiGraph g = delete_edges(w7, {7});  // spoke to v0
  auto b = find_barrier_containing(g, 1, 6);
  REQUIRE(b);
  CHECK(*b == VertexSet::of(8, {1, 6}));
}

TEST_CASE("matching covered and bicritical") {
  CHECK(is_matching_covered(odd_wheel(5)));
  CHECK(is_bicritical(odd_wheel(5)));
  CHECK(is_matching_covered(cycle_graph(6)));
  CHECK_FALSE(is_bicritical(cycle_graph(6)));
  CHECK_FALSE(is_matching_covered(complete_bipartite(1, 3)));
  CHECK_FALSE(is_matching_covered(path_graph(4)));
  CHECK(is_matching_covered(path_graph(2)));
  CHECK_FALSE(is_matching_covered(MultiGraph(1)));
}

TEST_CASE("matching index agrees with edge-by-edge test") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 * (1 + static_cast<int>(rng() % 5));
    MultiGraph g(n);
    std::bernoulli_distribution coin(0.45);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) g.add_edge(u, v);
        if (coin(rng) && coin(rng)) g.add_edge(u, v);
      }
    }
    CHECK(is_matching_covered(g) == reference::is_matching_covered(g));
  }
}
