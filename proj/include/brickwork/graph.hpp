#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace brickwork {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  EdgeId id = 0;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool touches(Vertex x) const { return u == x || v == x; }
};

/// Subset of the vertices 0..n-1 of a host graph with at most 64 vertices.
class VertexSet {
 public:
  static constexpr int kMaxVertices = 64;

  VertexSet() = default;
  VertexSet(int universe, std::uint64_t bits);

  static VertexSet none(int universe) { return VertexSet(universe, 0); }
  static VertexSet all(int universe);
  static VertexSet of(int universe, std::initializer_list<Vertex> members);
  static VertexSet of(int universe, std::span<const Vertex> members);

  int universe() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  int size() const;
  bool empty() const { return bits_ == 0; }
  bool is_proper_nonempty() const { return !empty() && size() < n_; }

  void insert(Vertex v);
  void erase(Vertex v);
  VertexSet complement() const;
  std::vector<Vertex> members() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

/// Loopless undirected multigraph. Edge ids are dense when a graph is built
/// from an edge list and stay attached to their edge through deletion and
/// contraction, so derived graphs may have gaps in the id range.
class MultiGraph {
 public:
  MultiGraph() : MultiGraph(1) {}
  explicit MultiGraph(int n);
  MultiGraph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  MultiGraph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  /// Appends an edge with the next unused id.
  EdgeId add_edge(Vertex u, Vertex v);
  /// Appends an edge with an explicit id, which must exceed every id in use.
  void add_edge_with_id(Vertex u, Vertex v, EdgeId id);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  /// Edges in ascending id order.
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(EdgeId id) const;
  const Edge& edge(EdgeId id) const;
  EdgeId next_id() const { return next_id_; }

  /// Ids of the edges at v, ascending.
  const std::vector<EdgeId>& incident(Vertex v) const { return incidence_[v]; }
  int degree(Vertex v) const { return static_cast<int>(incidence_[v].size()); }
  int max_degree() const;
  int multiplicity(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return multiplicity(u, v) > 0; }
  /// Distinct neighbours, ascending.
  std::vector<Vertex> neighbors(Vertex v) const;
  std::uint64_t neighbor_bits(Vertex v) const;
  bool is_simple() const;

 private:
  void check_vertex(Vertex v) const;

  int n_;
  std::vector<Edge> edges_;
  std::vector<int> index_of_;  // id -> position in edges_, -1 when absent
  std::vector<std::vector<EdgeId>> incidence_;
  EdgeId next_id_ = 0;
};

struct Contraction {
  MultiGraph graph;
  /// vertex_map[v] is the image of v; all of X maps to `contracted`.
  std::vector<Vertex> vertex_map;
  Vertex contracted = 0;
};

/// G/(X -> x). Surviving vertices keep their relative order and x becomes the
/// last vertex. Edges inside X disappear, every other edge keeps its id.
Contraction contract(const MultiGraph& g, const VertexSet& x);

/// Edge ids of the cut between X and its complement, ascending.
std::vector<EdgeId> edge_cut(const MultiGraph& g, const VertexSet& x);

struct SpliceMap {
  Vertex u = 0;  // vertex of G
  Vertex v = 0;  // vertex of H
  /// theta as (edge of G at u, edge of H at v) pairs.
  std::vector<std::pair<EdgeId, EdgeId>> theta;
};

struct SpliceResult {
  MultiGraph graph;
  /// Image of each vertex of G (resp. H); -1 for the spliced vertex.
  std::vector<Vertex> g_vertex;
  std::vector<Vertex> h_vertex;
  /// Image of each edge id of G (resp. H) not at the spliced vertex; -1 otherwise.
  std::vector<EdgeId> g_edge;
  std::vector<EdgeId> h_edge;
  /// Result edge created for theta[i].
  std::vector<EdgeId> cut;
  /// V(G) - u inside the result; its cut is exactly `cut`.
  VertexSet g_side;
};

/// (G(u) . H(v))_theta. Vertices of G-u come first (order kept), then those
/// of H-v. Edge ids: G-u edges, then H-v edges, then one edge per theta pair.
SpliceResult splice(const MultiGraph& g, const MultiGraph& h, const SpliceMap& map);

/// Theta pairing the stars of u and v position by position (ascending ids).
SpliceMap identity_splice_map(const MultiGraph& g, Vertex u, const MultiGraph& h,
                              Vertex v);

MultiGraph delete_edges(const MultiGraph& g, std::span<const EdgeId> ids);
MultiGraph delete_edges(const MultiGraph& g, std::initializer_list<EdgeId> ids);
/// Adds a copy of edge `id`; the copy receives next_id().
MultiGraph add_parallel(const MultiGraph& g, EdgeId id);
/// One edge per adjacent pair, keeping the smallest id of each class.
MultiGraph underlying_simple(const MultiGraph& g);

struct InducedSubgraph {
  MultiGraph graph;
  std::vector<Vertex> vertex_map;  // old -> new, -1 when dropped
};
/// G[keep]; edge ids preserved.
InducedSubgraph induced_subgraph(const MultiGraph& g, const VertexSet& keep);

bool is_connected(const MultiGraph& g);
/// Connected components of G - removed, each as a vertex set.
std::vector<VertexSet> components(const MultiGraph& g, const VertexSet& removed);

struct Bipartition {
  VertexSet a;
  VertexSet b;
};
struct BipartitionResult {
  std::optional<Bipartition> classes;
  /// Closed walk of odd length (as a vertex cycle) when not bipartite.
  std::vector<Vertex> odd_cycle;
};
/// Colour classes with vertex 0's component class containing vertex 0.
BipartitionResult bipartition(const MultiGraph& g);
bool is_bipartite(const MultiGraph& g);

/// At least four vertices and no separating set of at most two vertices.
bool is_three_connected(const MultiGraph& g);

/// Groups of two or more parallel edges, as (u, v, ids).
struct ParallelClass {
  Vertex u = 0;
  Vertex v = 0;
  std::vector<EdgeId> edges;
};
std::vector<ParallelClass> parallel_classes(const MultiGraph& g);

}  // namespace brickwork
