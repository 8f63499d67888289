#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "brickwork/graph.hpp"

namespace brickwork {

/// Odd wheel W_k: rim v0..v(k-1) in cyclic order, hub k. Rim edges come
/// first (ids 0..k-1, edge i joins v_i and v_(i+1)), then the spokes in rim
/// order, spoke i repeated spoke_multiplicity[i] times.
MultiGraph odd_wheel(int k, std::span<const int> spoke_multiplicity = {});

/// Any wheel W_k (k >= 3), same layout as odd_wheel.
MultiGraph wheel(int k, std::span<const int> spoke_multiplicity = {});

MultiGraph cycle_graph(int n);
MultiGraph path_graph(int n);
MultiGraph complete_graph(int n);
MultiGraph complete_bipartite(int a, int b);  // classes 0..a-1 and a..a+b-1

/// Frozen small graphs.
///
///   k4     complete graph, edges in lexicographic order.
///   c6bar  complement of the 6-cycle 0-1-2-3-4-5-0: triangles {0,2,4} and
///          {1,3,5} joined by 0-3, 1-4, 2-5. X = {0,2,4} is a shore of its
///          nontrivial separating cut.
///   r8     cubic planar near-bipartite brick on 8 vertices:
///            0-4 0-5 0-6 1-4 1-5 1-7 2-4 2-6 3-6 3-7 2-3 5-7
///          Its only removable edge is 0-4 (id 0); its removable doubletons
///          are {1-7, 3-6} (ids 5, 8) and {2-3, 5-7} (ids 10, 11).
///   w5, w7 odd_wheel(5), odd_wheel(7): hub is the last vertex.
///
/// Throws PreconditionError for any other name.
MultiGraph named_graph(std::string_view name);
std::vector<std::string> named_graph_names();

/// Hubs h for which G-h is a cycle of odd length and h is adjacent to all of
/// it (ignoring multiplicities). Empty when G is not an odd wheel.
std::vector<Vertex> odd_wheel_hubs(const MultiGraph& g);
bool is_odd_wheel(const MultiGraph& g);

}  // namespace brickwork
