#include "doctest.h"

#include <random>

#include "brickwork/cuts.hpp"
#include "brickwork/matching.hpp"
#include "brickwork/named.hpp"
#include "brickwork/removable.hpp"

using namespace brickwork;

namespace {

int count_doubletons(const std::vector<RemovableClass>& cs) {
  return static_cast<int>(std::count_if(cs.begin(), cs.end(), [](const auto& c) { return c.is_doubleton(); }));
}

}  // namespace

TEST_CASE("removable edges of W5") {
  const MultiGraph w5 = odd_wheel(5);
  for (const Edge& e : w5.edges()) {
    CHECK(is_removable_edge(w5, e.id) == e.touches(5));
  }
  const MultiGraph k4 = complete_graph(4);
  for (const Edge& e : k4.edges()) CHECK_FALSE(is_removable_edge(k4, e.id));
}

TEST_CASE("K4 has exactly three doubletons") {
  const auto cs = removable_classes(complete_graph(4));
  CHECK(cs.size() == 3);
  CHECK(count_doubletons(cs) == 3);
  CHECK(cs == reference::removable_classes(complete_graph(4)));
  CHECK(is_removable_doubleton(complete_graph(4), 0, 5));  // 0-1 and 2-3
  CHECK(wheel_like_hubs(complete_graph(4)) == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("C6bar: three doubletons, no removable edge") {
  const MultiGraph g = named_graph("c6bar");
  const auto cs = removable_classes(g);
  CHECK(count_doubletons(cs) == 3);
  CHECK(cs.size() == 3);
  CHECK(cs == reference::removable_classes(g));
  CHECK(wheel_like_hubs(g).empty());
  CHECK(is_near_bipartite(g));
}

TEST_CASE("R8 removable pattern") {
  const MultiGraph g = named_graph("r8");
  CHECK(g.edge_count() == 12);
  const auto cs = removable_classes(g);
  const std::vector<RemovableClass> expected{RemovableClass::edge(0), RemovableClass::doubleton(5, 8),
                                             RemovableClass::doubleton(10, 11)};
  CHECK(cs == expected);
  CHECK(cs == reference::removable_classes(g));
  CHECK_FALSE(is_wheel_like(g));
  CHECK(is_near_bipartite(g));
}

TEST_CASE("odd wheels: exactly the spokes are removable") {
  for (int k : {5, 7, 9}) {
    const MultiGraph w = odd_wheel(k);
    const auto cs = removable_classes(w);
    CHECK(count_doubletons(cs) == 0);
    REQUIRE(static_cast<int>(cs.size()) == k);
    for (const auto& c : cs) CHECK(w.edge(c.e).touches(k));
    CHECK(wheel_like_hubs(w) == std::vector<Vertex>{k});
    CHECK_FALSE(is_near_bipartite(w));
  }
}

TEST_CASE("triangle condition") {
  const MultiGraph w5 = odd_wheel(5);
  for (const Edge& e : w5.edges()) CHECK(triangle_condition(w5, e.id) == !e.touches(5));
  const MultiGraph k33 = complete_bipartite(3, 3);
  for (const Edge& e : k33.edges()) CHECK_FALSE(triangle_condition(k33, e.id));
}

TEST_CASE("bipartite nonremovable witness") {
  const MultiGraph c4 = cycle_graph(4);
  for (const Edge& e : c4.edges()) CHECK(bipartite_nonremovable_witness(c4, e.id));
  const MultiGraph k33 = complete_bipartite(3, 3);
  for (const Edge& e : k33.edges()) CHECK_FALSE(bipartite_nonremovable_witness(k33, e.id));
  const MultiGraph c6 = cycle_graph(6);
  for (const Edge& e : c6.edges()) {
    auto w = bipartite_nonremovable_witness(c6, e.id);
    REQUIRE(w);
    CHECK(w->a1.contains(e.u) != w->a1.contains(e.v));
  }
}

TEST_CASE("class kernel agrees with delete-and-test on random graphs") {
  std::mt19937 rng(5);
  int checked = 0;
  while (checked < 120) {
    const int n = 4 + 2 * static_cast<int>(rng() % 3);
    MultiGraph g(n);
    std::bernoulli_distribution coin(0.5);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) g.add_edge(u, v);
        if (coin(rng) && coin(rng) && coin(rng)) g.add_edge(u, v);
      }
    }
    if (!is_matching_covered(g)) continue;
    ++checked;
    CHECK(removable_classes(g) == reference::removable_classes(g));
  }
}
