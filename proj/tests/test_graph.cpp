#include "doctest.h"

#include <numeric>
#include <random>

#include "brickwork/canon.hpp"
#include "brickwork/errors.hpp"
#include "brickwork/graph.hpp"
#include "brickwork/named.hpp"

using namespace brickwork;

TEST_CASE("contract") {
  const MultiGraph w5 = odd_wheel(5);
  auto c = contract(w5, VertexSet::of(6, {0}));
  CHECK(c.graph.vertex_count() == 6);
  CHECK(c.graph.edge_count() == 10);
  CHECK(isomorphic(c.graph, w5));

  auto k = contract(complete_graph(4), VertexSet::of(4, {0, 1}));
  CHECK(k.graph.vertex_count() == 3);
  CHECK(k.graph.edge_count() == 5);
  CHECK_FALSE(k.graph.is_simple());
  CHECK(k.vertex_map[0] == k.contracted);
  CHECK(k.vertex_map[1] == k.contracted);
  CHECK_FALSE(k.graph.has_edge(0));  // 0-1 was inside X
  CHECK(k.graph.has_edge(5));

  CHECK_THROWS_AS(contract(w5, VertexSet::none(6)), PreconditionError);
  CHECK_THROWS_AS(contract(w5, VertexSet::all(6)), PreconditionError);
}

TEST_CASE("edge cuts") {
  const MultiGraph k4 = complete_graph(4);
  CHECK(edge_cut(k4, VertexSet::of(4, {2})) == std::vector<EdgeId>{1, 3, 5});
  const MultiGraph w5 = odd_wheel(5);
  CHECK(edge_cut(w5, VertexSet::of(6, {0, 1, 2, 3, 4})) == std::vector<EdgeId>{5, 6, 7, 8, 9});
  const MultiGraph c6bar = named_graph("c6bar");
  CHECK(edge_cut(c6bar, VertexSet::of(6, {0, 2, 4})).size() == 3);
}

TEST_CASE("edge cut symmetry and contraction counts over all shores") {
  const MultiGraph g = named_graph("r8");
  for (std::uint64_t bits = 1; bits + 1 < (1u << 8); ++bits) {
    const VertexSet x(8, bits);
    CHECK(edge_cut(g, x) == edge_cut(g, x.complement()));
    const auto c = contract(g, x);
    CHECK(c.graph.vertex_count() == 8 - x.size() + 1);
    const int inside = static_cast<int>(std::count_if(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
      return x.contains(e.u) && x.contains(e.v);
    }));
    CHECK(c.graph.edge_count() == g.edge_count() - inside);
  }
}

TEST_CASE("splice") {
  const MultiGraph k4 = complete_graph(4);
  const auto s = splice(k4, k4, identity_splice_map(k4, 0, k4, 0));
  CHECK(s.graph.vertex_count() == 6);
  CHECK(s.graph.edge_count() == 9);
  for (Vertex v = 0; v < 6; ++v) CHECK(s.graph.degree(v) == 3);
  CHECK(isomorphic(s.graph, named_graph("c6bar")));

  const MultiGraph w5 = odd_wheel(5);
  const std::vector<int> doubled{2, 1, 1, 1, 1};
  const MultiGraph h = odd_wheel(5, doubled);
  // Hub of W5 (degree 5) against rim vertex 0 of h (degree 2 + 2 = 4): mismatch.
  CHECK_THROWS_WITH_AS(identity_splice_map(w5, 5, h, 0), doctest::Contains("d_G(u)=5"),
                       PreconditionError);
  SpliceMap bad = identity_splice_map(k4, 0, k4, 0);
  bad.theta[1].second = bad.theta[0].second;
  CHECK_THROWS_AS(splice(k4, k4, bad), PreconditionError);
}

TEST_CASE("splice round trip") {
  std::mt19937 rng(1);
  const MultiGraph a = odd_wheel(5);
  const MultiGraph b = odd_wheel(7);
  for (int trial = 0; trial < 20; ++trial) {
    SpliceMap m = identity_splice_map(a, 1, b, 2);
    std::vector<EdgeId> hs;
    for (auto& [ge, he] : m.theta) hs.push_back(he);
    std::shuffle(hs.begin(), hs.end(), rng);
    for (std::size_t i = 0; i < hs.size(); ++i) m.theta[i].second = hs[i];
    const auto s = splice(a, b, m);
    CHECK(s.graph.vertex_count() == 6 + 8 - 2);
    CHECK(s.graph.edge_count() == 10 + 14 - 3);
    CHECK(isomorphic(contract(s.graph, s.g_side.complement()).graph, a));
    CHECK(isomorphic(contract(s.graph, s.g_side).graph, b));
    CHECK(edge_cut(s.graph, s.g_side) == s.cut);
  }
}

TEST_CASE("odd wheels") {
  CHECK(isomorphic(odd_wheel(3), complete_graph(4)));
  const MultiGraph w5 = odd_wheel(5);
  CHECK(w5.vertex_count() == 6);
  CHECK(w5.edge_count() == 10);
  CHECK(w5.degree(5) == 5);
  for (Vertex v = 0; v < 5; ++v) CHECK(w5.degree(v) == 3);
  const MultiGraph d = odd_wheel(5, std::vector<int>{1, 2, 1, 1, 1});
  CHECK(d.edge_count() == 11);
  CHECK(d.multiplicity(5, 1) == 2);
  CHECK_THROWS_AS(odd_wheel(4), PreconditionError);
  CHECK_THROWS_AS(odd_wheel(1), PreconditionError);
  CHECK(odd_wheel_hubs(w5) == std::vector<Vertex>{5});
  CHECK(odd_wheel_hubs(complete_graph(4)) == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(is_odd_wheel(d));
  CHECK_FALSE(is_odd_wheel(wheel(4)));
}

TEST_CASE("named graphs") {
  const MultiGraph c6bar = named_graph("c6bar");
  CHECK(c6bar.vertex_count() == 6);
  CHECK(c6bar.edge_count() == 9);
  for (Vertex v = 0; v < 6; ++v) CHECK(c6bar.degree(v) == 3);
  // Complement of the 6-cycle.
  for (Vertex v = 0; v < 6; ++v) CHECK_FALSE(c6bar.adjacent(v, (v + 1) % 6));
  CHECK(named_graph("k4").edge_count() == 6);
  const MultiGraph r8 = named_graph("r8");
  CHECK(r8.vertex_count() == 8);
  CHECK(r8.edge_count() == 12);
  CHECK_THROWS_AS(named_graph("petersen"), PreconditionError);
}

TEST_CASE("plumbing") {
  const MultiGraph d = odd_wheel(5, std::vector<int>{2, 1, 1, 1, 1});
  CHECK(isomorphic(underlying_simple(d), odd_wheel(5)));
  const auto bp = bipartition(cycle_graph(6));
  REQUIRE(bp.classes);
  CHECK(bp.classes->a == VertexSet::of(6, {0, 2, 4}));
  const auto odd = bipartition(cycle_graph(5));
  CHECK_FALSE(odd.classes);
  CHECK(odd.odd_cycle.size() % 2 == 1);
  CHECK(is_three_connected(complete_graph(4)));
  CHECK_FALSE(is_three_connected(cycle_graph(6)));
  const MultiGraph g = delete_edges(complete_graph(4), {2});
  CHECK(g.edge_count() == 5);
  CHECK_FALSE(g.has_edge(2));
  CHECK(g.has_edge(5));
  CHECK_THROWS_AS(delete_edges(complete_graph(4), {9}), PreconditionError);
  const MultiGraph p = add_parallel(complete_graph(4), 0);
  CHECK(p.multiplicity(0, 1) == 2);
  CHECK(p.edge(6).u == 0);
}

TEST_CASE("canonical form") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    MultiGraph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 3 == 0) g.add_edge(u, v);
      }
    }
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const MultiGraph h = relabel(g, perm);
    CHECK(canonical_code(g) == canonical_code(h));
  }
  CHECK_FALSE(isomorphic(cycle_graph(6), named_graph("c6bar")));
}
