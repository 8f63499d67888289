#include "doctest.h"

#include "brickwork/named.hpp"
#include "brickwork/planarity.hpp"

using namespace brickwork;

TEST_CASE("planarity verdicts") {
  CHECK_FALSE(is_planar(complete_graph(5)));
  CHECK_FALSE(is_planar(complete_bipartite(3, 3)));
  for (int k = 3; k <= 9; ++k) CHECK(is_planar(wheel(k)));
  const std::vector<int> mult{2, 1, 3, 1, 1};
  CHECK(is_planar(odd_wheel(5, mult)));
  CHECK(is_planar(named_graph("c6bar")));
  CHECK(is_planar(named_graph("r8")));
}

TEST_CASE("Kuratowski witnesses") {
  auto w = kuratowski_witness(complete_bipartite(3, 3));
  REQUIRE(w);
  CHECK(w->kind == KuratowskiKind::k33);
  CHECK(validate_witness(complete_bipartite(3, 3), *w).empty());
  for (const auto& p : w->paths) CHECK(p.size() == 2);

  w = kuratowski_witness(complete_graph(5));
  REQUIRE(w);
  CHECK(w->kind == KuratowskiKind::k5);
  CHECK(validate_witness(complete_graph(5), *w).empty());

  CHECK_FALSE(kuratowski_witness(odd_wheel(5)));

  // Petersen graph has a K3,3 subdivision but no K5 subdivision.
  MultiGraph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8},
                           {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  w = kuratowski_witness(petersen);
  REQUIRE(w);
  CHECK(w->kind == KuratowskiKind::k33);
  CHECK(validate_witness(petersen, *w).empty());
}

TEST_CASE("witness validation rejects broken witnesses") {
  auto w = kuratowski_witness(complete_bipartite(3, 3));
  REQUIRE(w);
  auto broken = *w;
  broken.paths[0] = {broken.branch[0], broken.branch[1]};
  CHECK_FALSE(validate_witness(complete_bipartite(3, 3), broken).empty());
}
