#pragma once

#include <optional>
#include <vector>

#include "brickwork/graph.hpp"

namespace brickwork {

/// A removable edge (f empty) or a removable doubleton {e, f} with e < f.
struct RemovableClass {
  EdgeId e = 0;
  std::optional<EdgeId> f;

  static RemovableClass edge(EdgeId e) { return {e, std::nullopt}; }
  static RemovableClass doubleton(EdgeId a, EdgeId b);

  bool is_doubleton() const { return f.has_value(); }
  std::vector<EdgeId> edges() const;
  bool touches(const MultiGraph& g, Vertex v) const;

  friend bool operator==(const RemovableClass&, const RemovableClass&) = default;
};

/// G - e is matching covered.
bool is_removable_edge(const MultiGraph& g, EdgeId e);
/// G - e - f is matching covered while G - e and G - f are not.
bool is_removable_doubleton(const MultiGraph& g, EdgeId e, EdgeId f);

/// All removable classes of a matching covered G: removable edges by id,
/// then doubletons by (e, f). Parallel edges are separate candidates.
std::vector<RemovableClass> removable_classes(const MultiGraph& g);

namespace reference {
/// Delete-and-test on explicit copies of G.
std::vector<RemovableClass> removable_classes(const MultiGraph& g);
}  // namespace reference

/// First removable doubleton R (in class order) with G - R bipartite.
std::optional<RemovableClass> is_near_bipartite(const MultiGraph& g);

/// Vertices meeting an edge of every removable class, ascending. Every
/// vertex qualifies when G has no removable class.
std::vector<Vertex> hubs_of(const MultiGraph& g, const std::vector<RemovableClass>& classes);
std::vector<Vertex> wheel_like_hubs(const MultiGraph& g);
bool is_wheel_like(const MultiGraph& g);

/// One end x of e has three distinct neighbours, degree 3, and its two
/// neighbours other than the far end of e are adjacent.
bool triangle_condition(const MultiGraph& g, EdgeId e);

/// For bipartite matching covered G with at least two edges and e = uv:
/// A1 (holding u, inside u's class) and B1 (inside v's class, avoiding v)
/// with G[A1 ∪ B1] matching covered and e the only edge from A1 to the rest
/// of v's class. Exists exactly when e is not removable.
struct NonremovableWitness {
  VertexSet a1;
  VertexSet b1;
};
std::optional<NonremovableWitness> bipartite_nonremovable_witness(const MultiGraph& g, EdgeId e);

}  // namespace brickwork
