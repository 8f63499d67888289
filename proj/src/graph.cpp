#include "brickwork/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "brickwork/errors.hpp"

namespace brickwork {

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(int universe, std::uint64_t bits) : n_(universe), bits_(bits) {
  if (universe < 0 || universe > kMaxVertices) {
    throw PreconditionError("vertex sets support at most 64 vertices");
  }
  if (universe < 64 && (bits >> universe) != 0) {
    throw PreconditionError("vertex set has members outside the host graph");
  }
}

VertexSet VertexSet::all(int universe) {
  return VertexSet(universe, universe == 64 ? ~0ULL : ((1ULL << universe) - 1));
}

VertexSet VertexSet::of(int universe, std::initializer_list<Vertex> members) {
  return of(universe, std::span<const Vertex>(members.begin(), members.size()));
}

VertexSet VertexSet::of(int universe, std::span<const Vertex> members) {
  VertexSet s = none(universe);
  for (Vertex v : members) s.insert(v);
  return s;
}

int VertexSet::size() const { return std::popcount(bits_); }

void VertexSet::insert(Vertex v) {
  if (v < 0 || v >= n_) throw PreconditionError("vertex out of range");
  bits_ |= 1ULL << v;
}

void VertexSet::erase(Vertex v) {
  if (v < 0 || v >= n_) throw PreconditionError("vertex out of range");
  bits_ &= ~(1ULL << v);
}

VertexSet VertexSet::complement() const { return VertexSet(n_, all(n_).bits_ & ~bits_); }

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

// --------------------------------------------------------------- MultiGraph

MultiGraph::MultiGraph(int n) : n_(n), incidence_(n > 0 ? n : 0) {
  if (n < 1) throw PreconditionError("a graph needs at least one vertex");
}

MultiGraph::MultiGraph(int n, std::span<const std::pair<Vertex, Vertex>> edges)
    : MultiGraph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

MultiGraph::MultiGraph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : MultiGraph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

void MultiGraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  }
}

EdgeId MultiGraph::add_edge(Vertex u, Vertex v) {
  EdgeId id = next_id_;
  add_edge_with_id(u, v, id);
  return id;
}

void MultiGraph::add_edge_with_id(Vertex u, Vertex v, EdgeId id) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw PreconditionError("loops are not allowed");
  if (id < next_id_) throw PreconditionError("edge ids must be added in increasing order");
  index_of_.resize(static_cast<std::size_t>(id) + 1, -1);
  index_of_[id] = static_cast<int>(edges_.size());
  edges_.push_back(Edge{u, v, id});
  incidence_[u].push_back(id);
  incidence_[v].push_back(id);
  next_id_ = id + 1;
}

bool MultiGraph::has_edge(EdgeId id) const {
  return id >= 0 && id < static_cast<EdgeId>(index_of_.size()) && index_of_[id] >= 0;
}

const Edge& MultiGraph::edge(EdgeId id) const {
  if (!has_edge(id)) throw PreconditionError("invalid edge id " + std::to_string(id));
  return edges_[index_of_[id]];
}

int MultiGraph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

int MultiGraph::multiplicity(Vertex u, Vertex v) const {
  int count = 0;
  for (EdgeId id : incidence_[u]) {
    if (edge(id).other(u) == v) ++count;
  }
  return count;
}

std::vector<Vertex> MultiGraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (EdgeId id : incidence_[v]) out.push_back(edge(id).other(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t MultiGraph::neighbor_bits(Vertex v) const {
  std::uint64_t bits = 0;
  for (EdgeId id : incidence_[v]) bits |= 1ULL << edge(id).other(v);
  return bits;
}

bool MultiGraph::is_simple() const {
  for (Vertex v = 0; v < n_; ++v) {
    if (static_cast<int>(neighbors(v).size()) != degree(v)) return false;
  }
  return true;
}

// ------------------------------------------------------------- operations

namespace {

void require_shore(const MultiGraph& g, const VertexSet& x) {
  if (x.universe() != g.vertex_count()) {
    throw PreconditionError("vertex set belongs to a graph of a different order");
  }
  if (!x.is_proper_nonempty()) {
    throw PreconditionError("shore must be a nonempty proper subset of V(G)");
  }
}

}  // namespace

Contraction contract(const MultiGraph& g, const VertexSet& x) {
  require_shore(g, x);
  const int n = g.vertex_count();
  std::vector<Vertex> map(n, -1);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!x.contains(v)) map[v] = next++;
  }
  const Vertex contracted = next;
  for (Vertex v = 0; v < n; ++v) {
    if (x.contains(v)) map[v] = contracted;
  }
  MultiGraph out(contracted + 1);
  for (const Edge& e : g.edges()) {
    if (x.contains(e.u) && x.contains(e.v)) continue;
    out.add_edge_with_id(map[e.u], map[e.v], e.id);
  }
  return Contraction{std::move(out), std::move(map), contracted};
}

std::vector<EdgeId> edge_cut(const MultiGraph& g, const VertexSet& x) {
  require_shore(g, x);
  std::vector<EdgeId> out;
  for (const Edge& e : g.edges()) {
    if (x.contains(e.u) != x.contains(e.v)) out.push_back(e.id);
  }
  return out;
}

SpliceResult splice(const MultiGraph& g, const MultiGraph& h, const SpliceMap& map) {
  const Vertex u = map.u;
  const Vertex v = map.v;
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= h.vertex_count()) {
    throw PreconditionError("splice vertex out of range");
  }
  if (g.degree(u) != h.degree(v)) {
    throw PreconditionError("splice degree mismatch: d_G(u)=" + std::to_string(g.degree(u)) +
                            ", d_H(v)=" + std::to_string(h.degree(v)));
  }
  if (static_cast<int>(map.theta.size()) != g.degree(u)) {
    throw PreconditionError("theta must pair every edge at u with one edge at v");
  }
  std::vector<EdgeId> seen_g;
  std::vector<EdgeId> seen_h;
  for (auto [eg, eh] : map.theta) {
    if (!g.has_edge(eg) || !g.edge(eg).touches(u)) {
      throw PreconditionError("theta uses an edge that is not incident with u");
    }
    if (!h.has_edge(eh) || !h.edge(eh).touches(v)) {
      throw PreconditionError("theta uses an edge that is not incident with v");
    }
    seen_g.push_back(eg);
    seen_h.push_back(eh);
  }
  std::sort(seen_g.begin(), seen_g.end());
  std::sort(seen_h.begin(), seen_h.end());
  if (std::adjacent_find(seen_g.begin(), seen_g.end()) != seen_g.end() ||
      std::adjacent_find(seen_h.begin(), seen_h.end()) != seen_h.end()) {
    throw PreconditionError("theta is not a bijection");
  }

  SpliceResult r{MultiGraph(g.vertex_count() + h.vertex_count() - 2), {}, {}, {}, {}, {}, {}};
  r.g_vertex.assign(g.vertex_count(), -1);
  r.h_vertex.assign(h.vertex_count(), -1);
  Vertex next = 0;
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    if (w != u) r.g_vertex[w] = next++;
  }
  const Vertex g_count = next;
  for (Vertex w = 0; w < h.vertex_count(); ++w) {
    if (w != v) r.h_vertex[w] = next++;
  }
  r.g_edge.assign(g.next_id(), -1);
  r.h_edge.assign(h.next_id(), -1);
  for (const Edge& e : g.edges()) {
    if (e.touches(u)) continue;
    r.g_edge[e.id] = r.graph.add_edge(r.g_vertex[e.u], r.g_vertex[e.v]);
  }
  for (const Edge& e : h.edges()) {
    if (e.touches(v)) continue;
    r.h_edge[e.id] = r.graph.add_edge(r.h_vertex[e.u], r.h_vertex[e.v]);
  }
  for (auto [eg, eh] : map.theta) {
    const Vertex gend = r.g_vertex[g.edge(eg).other(u)];
    const Vertex hend = r.h_vertex[h.edge(eh).other(v)];
    r.cut.push_back(r.graph.add_edge(gend, hend));
  }
  r.g_side = VertexSet(r.graph.vertex_count(),
                       g_count == 64 ? ~0ULL : ((1ULL << g_count) - 1));
  return r;
}

SpliceMap identity_splice_map(const MultiGraph& g, Vertex u, const MultiGraph& h, Vertex v) {
  if (g.degree(u) != h.degree(v)) {
    throw PreconditionError("splice degree mismatch: d_G(u)=" + std::to_string(g.degree(u)) +
                            ", d_H(v)=" + std::to_string(h.degree(v)));
  }
  SpliceMap m{u, v, {}};
  for (std::size_t i = 0; i < g.incident(u).size(); ++i) {
    m.theta.emplace_back(g.incident(u)[i], h.incident(v)[i]);
  }
  return m;
}

MultiGraph delete_edges(const MultiGraph& g, std::span<const EdgeId> ids) {
  std::vector<EdgeId> gone(ids.begin(), ids.end());
  for (EdgeId id : gone) {
    if (!g.has_edge(id)) throw PreconditionError("invalid edge id " + std::to_string(id));
  }
  std::sort(gone.begin(), gone.end());
  MultiGraph out(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(gone.begin(), gone.end(), e.id)) out.add_edge_with_id(e.u, e.v, e.id);
  }
  return out;
}

MultiGraph delete_edges(const MultiGraph& g, std::initializer_list<EdgeId> ids) {
  return delete_edges(g, std::span<const EdgeId>(ids.begin(), ids.size()));
}

MultiGraph add_parallel(const MultiGraph& g, EdgeId id) {
  const Edge& e = g.edge(id);
  MultiGraph out = g;
  out.add_edge(e.u, e.v);
  return out;
}

MultiGraph underlying_simple(const MultiGraph& g) {
  MultiGraph out(g.vertex_count());
  std::vector<std::pair<Vertex, Vertex>> seen;
  for (const Edge& e : g.edges()) {
    auto key = std::minmax(e.u, e.v);
    std::pair<Vertex, Vertex> p{key.first, key.second};
    if (std::find(seen.begin(), seen.end(), p) != seen.end()) continue;
    seen.push_back(p);
    out.add_edge_with_id(e.u, e.v, e.id);
  }
  return out;
}

InducedSubgraph induced_subgraph(const MultiGraph& g, const VertexSet& keep) {
  if (keep.empty()) throw PreconditionError("induced subgraph needs at least one vertex");
  std::vector<Vertex> map(g.vertex_count(), -1);
  Vertex next = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (keep.contains(v)) map[v] = next++;
  }
  MultiGraph out(next);
  for (const Edge& e : g.edges()) {
    if (keep.contains(e.u) && keep.contains(e.v)) out.add_edge_with_id(map[e.u], map[e.v], e.id);
  }
  return InducedSubgraph{std::move(out), std::move(map)};
}

std::vector<VertexSet> components(const MultiGraph& g, const VertexSet& removed) {
  const int n = g.vertex_count();
  std::vector<std::uint64_t> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbor_bits(v);
  std::uint64_t left = VertexSet::all(n).bits() & ~removed.bits();
  std::vector<VertexSet> out;
  while (left != 0) {
    std::uint64_t comp = left & (~left + 1);
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      std::uint64_t grow = 0;
      for (std::uint64_t b = frontier; b != 0; b &= b - 1) grow |= adj[std::countr_zero(b)];
      grow &= left & ~comp;
      comp |= grow;
      frontier = grow;
    }
    out.emplace_back(n, comp);
    left &= ~comp;
  }
  return out;
}

bool is_connected(const MultiGraph& g) {
  return components(g, VertexSet::none(g.vertex_count())).size() == 1;
}

BipartitionResult bipartition(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(n, -1);
  std::vector<Vertex> parent(n, -1);
  for (Vertex root = 0; root < n; ++root) {
    if (colour[root] >= 0) continue;
    colour[root] = 0;
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      for (Vertex y : g.neighbors(x)) {
        if (colour[y] < 0) {
          colour[y] = 1 - colour[x];
          parent[y] = x;
          queue.push_back(y);
        } else if (colour[y] == colour[x]) {
          // Tree paths from x and y meet at their lowest common ancestor.
          std::vector<Vertex> px{x};
          while (parent[px.back()] >= 0) px.push_back(parent[px.back()]);
          std::vector<Vertex> py{y};
          while (parent[py.back()] >= 0) py.push_back(parent[py.back()]);
          while (px.size() > 1 && py.size() > 1 && px[px.size() - 2] == py[py.size() - 2]) {
            px.pop_back();
            py.pop_back();
          }
          BipartitionResult r;
          r.odd_cycle = px;
          for (auto it = py.rbegin() + 1; it != py.rend(); ++it) r.odd_cycle.push_back(*it);
          return r;
        }
      }
    }
  }
  Bipartition classes{VertexSet::none(n), VertexSet::none(n)};
  for (Vertex v = 0; v < n; ++v) (colour[v] == 0 ? classes.a : classes.b).insert(v);
  return BipartitionResult{classes, {}};
}

bool is_bipartite(const MultiGraph& g) { return bipartition(g).classes.has_value(); }

bool is_three_connected(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n < 4) return false;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a; b < n; ++b) {
      VertexSet removed = VertexSet::of(n, {a, b});
      if (components(g, removed).size() != 1) return false;
    }
  }
  return true;
}

std::vector<ParallelClass> parallel_classes(const MultiGraph& g) {
  std::map<std::pair<Vertex, Vertex>, std::vector<EdgeId>> groups;
  for (const Edge& e : g.edges()) {
    auto key = std::minmax(e.u, e.v);
    groups[{key.first, key.second}].push_back(e.id);
  }
  std::vector<ParallelClass> out;
  for (auto& [key, ids] : groups) {
    if (ids.size() >= 2) out.push_back(ParallelClass{key.first, key.second, ids});
  }
  return out;
}

}  // namespace brickwork
