#include "brickwork/named.hpp"

#include <string>

#include "brickwork/errors.hpp"

namespace brickwork {

MultiGraph wheel(int k, std::span<const int> spoke_multiplicity) {
  if (k < 3) throw PreconditionError("a wheel needs a rim of length at least 3");
  if (!spoke_multiplicity.empty() && static_cast<int>(spoke_multiplicity.size()) != k) {
    throw PreconditionError("one spoke multiplicity per rim vertex is required");
  }
  MultiGraph g(k + 1);
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  for (int i = 0; i < k; ++i) {
    const int mult = spoke_multiplicity.empty() ? 1 : spoke_multiplicity[i];
    if (mult < 1) throw PreconditionError("spoke multiplicities must be at least 1");
    for (int c = 0; c < mult; ++c) g.add_edge(k, i);
  }
  return g;
}

MultiGraph odd_wheel(int k, std::span<const int> spoke_multiplicity) {
  if (k < 3 || k % 2 == 0) {
    throw PreconditionError("odd wheel needs an odd rim length >= 3, got " + std::to_string(k));
  }
  return wheel(k, spoke_multiplicity);
}

MultiGraph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("a cycle needs at least 3 vertices");
  MultiGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

MultiGraph path_graph(int n) {
  MultiGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

MultiGraph complete_graph(int n) {
  MultiGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

MultiGraph complete_bipartite(int a, int b) {
  MultiGraph g(a + b);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  }
  return g;
}

MultiGraph named_graph(std::string_view name) {
  if (name == "k4") return complete_graph(4);
  if (name == "c6bar") {
    return MultiGraph(6, {{0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 5}});
  }
  if (name == "r8") {
    return MultiGraph(8, {{0, 4}, {0, 5}, {0, 6}, {1, 4}, {1, 5}, {1, 7}, {2, 4}, {2, 6}, {3, 6},
                          {3, 7}, {2, 3}, {5, 7}});
  }
  if (name == "w5") return odd_wheel(5);
  if (name == "w7") return odd_wheel(7);
  throw PreconditionError("unknown named graph '" + std::string(name) + "'");
}

std::vector<std::string> named_graph_names() { return {"k4", "c6bar", "r8", "w5", "w7"}; }

std::vector<Vertex> odd_wheel_hubs(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<Vertex> hubs;
  if (n < 4 || n % 2 != 0) return hubs;
  for (Vertex h = 0; h < n; ++h) {
    if (static_cast<int>(g.neighbors(h).size()) != n - 1) continue;
    // G - h must be a single cycle through the other n-1 vertices.
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      if (v == h) continue;
      auto nb = g.neighbors(v);
      int rim_neighbors = 0;
      for (Vertex w : nb) {
        if (w == h) continue;
        ++rim_neighbors;
      }
      if (rim_neighbors != 2) ok = false;
    }
    if (!ok) continue;
    // Two-regular on n-1 vertices: connected means one cycle.
    Vertex prev = -1;
    Vertex cur = h == 0 ? 1 : 0;
    const Vertex start = cur;
    int length = 0;
    do {
      Vertex next = -1;
      for (Vertex w : g.neighbors(cur)) {
        if (w != h && w != prev) {
          next = w;
          break;
        }
      }
      prev = cur;
      cur = next;
      ++length;
    } while (cur != start && cur >= 0 && length <= n);
    if (length == n - 1) hubs.push_back(h);
  }
  return hubs;
}

bool is_odd_wheel(const MultiGraph& g) { return !odd_wheel_hubs(g).empty(); }

}  // namespace brickwork
