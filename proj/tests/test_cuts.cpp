#include "doctest.h"

#include <random>

#include "brickwork/canon.hpp"
#include "brickwork/cuts.hpp"
#include "brickwork/errors.hpp"
#include "brickwork/named.hpp"

using namespace brickwork;

namespace {

const VertexSet kC6barShore = VertexSet::of(6, {0, 2, 4});

}  // namespace

TEST_CASE("classify_cut fixtures") {
  const MultiGraph w5 = odd_wheel(5);
  auto r = classify_cut(w5, VertexSet::of(6, {0}));
  CHECK(r.trivial);
  CHECK(r.tight);
  CHECK(r.separating);

  const MultiGraph c6bar = named_graph("c6bar");
  r = classify_cut(c6bar, kC6barShore);
  CHECK(r.separating);
  CHECK_FALSE(r.tight);
  REQUIRE(r.non_tight_witness);
  int crossing = 0;
  for (EdgeId id : *r.non_tight_witness) {
    crossing += kC6barShore.contains(c6bar.edge(id).u) != kC6barShore.contains(c6bar.edge(id).v);
  }
  CHECK(crossing == 3);
  CHECK(r.robust);
  CHECK(r.cut.size() == 3);

  const MultiGraph c6 = cycle_graph(6);
  r = classify_cut(c6, VertexSet::of(6, {0, 1}));
  CHECK_FALSE(r.separating);
}

TEST_CASE("contractions of C6bar along its separating cut are K4 up to multiplicity") {
  const MultiGraph c6bar = named_graph("c6bar");
  for (const VertexSet& x : {kC6barShore, kC6barShore.complement()}) {
    const MultiGraph c = contract(c6bar, x).graph;
    CHECK(isomorphic(underlying_simple(c), complete_graph(4)));
  }
}

TEST_CASE("bricks and braces") {
  for (const char* name : {"k4", "w5", "w7", "c6bar", "r8"}) {
    CAPTURE(name);
    CHECK(is_brick(named_graph(name)));
  }
  CHECK_FALSE(is_brick(cycle_graph(6)));
  CHECK(is_brace(complete_bipartite(3, 3)));
  CHECK(is_brace(cycle_graph(4)));
  CHECK_FALSE(is_brace(cycle_graph(6)));
}

TEST_CASE("tight cut decomposition") {
  CHECK(brick_count(odd_wheel(5)) == 1);
  CHECK(brick_count(cycle_graph(6)) == 0);
  // Barrier {3, 4} with two triangles as odd components: both triangle
  // cuts are tight and each contracts to a K4 up to multiplicity.
  MultiGraph g(8, {{0, 1}, {0, 2}, {1, 2}, {5, 6}, {5, 7}, {6, 7}, {0, 3}, {1, 3}, {2, 4},
                   {5, 3}, {6, 4}, {7, 4}});
  REQUIRE(is_matching_covered(g));
  const auto d = tight_cut_decomposition(g);
  CHECK(d.brick_count() == 2);
  CHECK(d.leaves.size() == 3);
  CHECK(brick_count(g, ShorePolicy::largest) == 2);
  CHECK(is_near_brick(odd_wheel(7)));
  CHECK_FALSE(is_near_brick(g));
}

TEST_CASE("fast tight cut search agrees with the reference search") {
  std::mt19937 rng(3);
  int checked = 0;
  while (checked < 150) {
    const int n = 6 + 2 * static_cast<int>(rng() % 2);
    MultiGraph g(n);
    std::bernoulli_distribution coin(0.45);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) g.add_edge(u, v);
      }
    }
    if (!is_matching_covered(g)) continue;
    ++checked;
    for (auto policy : {ShorePolicy::smallest, ShorePolicy::largest}) {
      CHECK(find_nontrivial_tight_cut(g, policy) == reference::find_nontrivial_tight_cut(g, policy));
    }
  }
}

TEST_CASE("solidity") {
  CHECK(is_solid(odd_wheel(5)));
  CHECK(is_solid(odd_wheel(7)));
  CHECK(is_solid(complete_graph(4)));
  CHECK_FALSE(is_solid(named_graph("c6bar")));
  Budget tiny;
  tiny.solid_max_n = 6;
  CHECK_THROWS_AS(is_solid(odd_wheel(7), tiny), BudgetExceeded);
}

TEST_CASE("robust cuts") {
  CHECK_FALSE(find_robust_cut(odd_wheel(5)));
  auto r = find_robust_cut(named_graph("c6bar"));
  REQUIRE(r);
  CHECK(r->robust);
  for (const VertexSet& x : {r->shore, r->shore.complement()}) {
    CHECK(isomorphic(underlying_simple(contract(named_graph("c6bar"), x).graph), complete_graph(4)));
  }
}

TEST_CASE("robust refinement on C6bar is degenerate") {
  const MultiGraph c6bar = named_graph("c6bar");
  auto ref = robust_refinement(c6bar, kC6barShore);
  REQUIRE(ref);
  CHECK(ref->x_prime == kC6barShore);
  CHECK(ref->x_double_prime == kC6barShore);
  CHECK(ref->h.vertex_count() == 2);
  CHECK(ref->h.edge_count() == 3);
}

TEST_CASE("shore enumeration") {
  const auto shores = nontrivial_odd_shores(6);
  CHECK(shores.size() == 10);  // C(6,3) / 2
  for (const auto& x : shores) CHECK(canonical_shore(x) == x);
  CHECK(nontrivial_odd_shores(8).size() == 56);
}
