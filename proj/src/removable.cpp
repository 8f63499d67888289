#include "brickwork/removable.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>

#include "brickwork/errors.hpp"
#include "brickwork/matching.hpp"

namespace brickwork {

RemovableClass RemovableClass::doubleton(EdgeId a, EdgeId b) {
  if (a == b) throw PreconditionError("a doubleton needs two distinct edges");
  return {std::min(a, b), std::max(a, b)};
}

std::vector<EdgeId> RemovableClass::edges() const {
  if (f) return {e, *f};
  return {e};
}

bool RemovableClass::touches(const MultiGraph& g, Vertex v) const {
  if (g.edge(e).touches(v)) return true;
  return f && g.edge(*f).touches(v);
}

bool is_removable_edge(const MultiGraph& g, EdgeId e) {
  return is_matching_covered(delete_edges(g, {e}));
}

bool is_removable_doubleton(const MultiGraph& g, EdgeId e, EdgeId f) {
  if (e == f) throw PreconditionError("a doubleton needs two distinct edges");
  return is_matching_covered(delete_edges(g, {e, f})) && !is_removable_edge(g, e) &&
         !is_removable_edge(g, f);
}

namespace {

/// Visits removable edges in id order, then doubletons; stops when `visit`
/// returns false.
template <typename Covered, typename Visit>
void scan_classes(const MultiGraph& g, Covered covered_without, Visit visit) {
  std::vector<EdgeId> stuck;
  for (const Edge& e : g.edges()) {
    const EdgeId del[] = {e.id};
    if (covered_without(std::span<const EdgeId>(del))) {
      if (!visit(RemovableClass::edge(e.id))) return;
    } else {
      stuck.push_back(e.id);
    }
  }
  // A doubleton never contains a removable edge.
  for (std::size_t i = 0; i < stuck.size(); ++i) {
    for (std::size_t j = i + 1; j < stuck.size(); ++j) {
      const EdgeId del[] = {stuck[i], stuck[j]};
      if (covered_without(std::span<const EdgeId>(del))) {
        if (!visit(RemovableClass::doubleton(stuck[i], stuck[j]))) return;
      }
    }
  }
}

template <typename Covered>
std::vector<RemovableClass> collect_classes(const MultiGraph& g, Covered covered_without) {
  std::vector<RemovableClass> out;
  scan_classes(g, covered_without, [&](const RemovableClass& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::optional<PerfectMatchingIndex> build_index(const MultiGraph& g) {
  if (!PerfectMatchingIndex::supports(g)) return std::nullopt;
  std::optional<PerfectMatchingIndex> index;
  try {
    index.emplace(g, 2'000'000);
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
  if (!index->matching_covered()) {
    throw PreconditionError("removable classes are defined for matching covered graphs");
  }
  return index;
}

}  // namespace

std::vector<RemovableClass> removable_classes(const MultiGraph& g) {
  auto index = build_index(g);
  if (!index) return reference::removable_classes(g);
  return collect_classes(g, [&](std::span<const EdgeId> del) {
    return index->matching_covered_without(del);
  });
}

namespace reference {

std::vector<RemovableClass> removable_classes(const MultiGraph& g) {
  if (!reference::is_matching_covered(g)) {
    throw PreconditionError("removable classes are defined for matching covered graphs");
  }
  return collect_classes(g, [&](std::span<const EdgeId> del) {
    return reference::is_matching_covered(delete_edges(g, del));
  });
}

}  // namespace reference

std::optional<RemovableClass> is_near_bipartite(const MultiGraph& g) {
  for (const RemovableClass& c : removable_classes(g)) {
    if (c.is_doubleton() && is_bipartite(delete_edges(g, c.edges()))) return c;
  }
  return std::nullopt;
}

std::vector<Vertex> hubs_of(const MultiGraph& g, const std::vector<RemovableClass>& classes) {
  std::vector<Vertex> hubs;
  for (Vertex h = 0; h < g.vertex_count(); ++h) {
    const bool all = std::all_of(classes.begin(), classes.end(),
                                 [&](const RemovableClass& c) { return c.touches(g, h); });
    if (all) hubs.push_back(h);
  }
  return hubs;
}

std::vector<Vertex> wheel_like_hubs(const MultiGraph& g) { return hubs_of(g, removable_classes(g)); }

bool is_wheel_like(const MultiGraph& g) {
  auto index = build_index(g);
  if (!index) return !wheel_like_hubs(g).empty();
  if (g.vertex_count() > VertexSet::kMaxVertices) return !wheel_like_hubs(g).empty();
  // Candidate hubs shrink with every class found.
  std::uint64_t candidates = VertexSet::all(g.vertex_count()).bits();
  scan_classes(
      g, [&](std::span<const EdgeId> del) { return index->matching_covered_without(del); },
      [&](const RemovableClass& c) {
        std::uint64_t ends = 0;
        for (EdgeId id : c.edges()) {
          ends |= (std::uint64_t{1} << g.edge(id).u) | (std::uint64_t{1} << g.edge(id).v);
        }
        candidates &= ends;
        return candidates != 0;
      });
  return candidates != 0;
}

bool triangle_condition(const MultiGraph& g, EdgeId e) {
  const Edge& edge = g.edge(e);
  for (Vertex x : {edge.u, edge.v}) {
    const Vertex far = edge.other(x);
    if (g.degree(x) != 3) continue;
    const auto nb = g.neighbors(x);
    if (nb.size() != 3) continue;
    std::vector<Vertex> rest;
    for (Vertex w : nb) {
      if (w != far) rest.push_back(w);
    }
    if (g.adjacent(rest[0], rest[1])) return true;
  }
  return false;
}

std::optional<NonremovableWitness> bipartite_nonremovable_witness(const MultiGraph& g, EdgeId e) {
  if (g.edge_count() < 2) throw PreconditionError("the witness needs at least two edges");
  if (!is_matching_covered(g)) throw PreconditionError("the witness needs a matching covered graph");
  const auto parts = bipartition(g);
  if (!parts.classes) throw PreconditionError("the witness needs a bipartite graph");
  const int n = g.vertex_count();
  const Edge& edge = g.edge(e);
  const bool u_in_a = parts.classes->a.contains(edge.u);
  const VertexSet a = u_in_a ? parts.classes->a : parts.classes->b;
  const VertexSet b = u_in_a ? parts.classes->b : parts.classes->a;
  const Vertex u = edge.u;
  const Vertex v = edge.v;
  const std::vector<Vertex> a_rest = [&] {
    std::vector<Vertex> r;
    for (Vertex x : a.members()) {
      if (x != u) r.push_back(x);
    }
    return r;
  }();
  const std::vector<Vertex> b_rest = [&] {
    std::vector<Vertex> r;
    for (Vertex x : b.members()) {
      if (x != v) r.push_back(x);
    }
    return r;
  }();
  using Mask = std::uint64_t;
  std::vector<std::pair<Mask, Mask>> order;
  for (Mask sa = 0; sa < (Mask{1} << a_rest.size()); ++sa) {
    Mask a1 = Mask{1} << u;
    for (Mask s = sa; s != 0; s &= s - 1) a1 |= Mask{1} << a_rest[std::countr_zero(s)];
    if (a1 == a.bits()) continue;
    for (Mask sb = 1; sb < (Mask{1} << b_rest.size()); ++sb) {
      Mask b1 = 0;
      for (Mask s = sb; s != 0; s &= s - 1) b1 |= Mask{1} << b_rest[std::countr_zero(s)];
      order.emplace_back(a1, b1);
    }
  }
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    const int sx = std::popcount(x.first) + std::popcount(x.second);
    const int sy = std::popcount(y.first) + std::popcount(y.second);
    return sx != sy ? sx < sy : x < y;
  });
  for (auto [a1, b1] : order) {
    // E[A1, B - B1] must be exactly {e}.
    bool only_e = true;
    for (const Edge& f : g.edges()) {
      const bool fu_a1 = (a1 >> f.u) & 1;
      const bool fv_a1 = (a1 >> f.v) & 1;
      const bool fu_rest = b.contains(f.u) && !((b1 >> f.u) & 1);
      const bool fv_rest = b.contains(f.v) && !((b1 >> f.v) & 1);
      if ((fu_a1 && fv_rest) || (fv_a1 && fu_rest)) {
        if (f.id != e) {
          only_e = false;
          break;
        }
      }
    }
    if (!only_e) continue;
    const VertexSet keep(n, a1 | b1);
    if (!is_matching_covered(induced_subgraph(g, keep).graph)) continue;
    return NonremovableWitness{VertexSet(n, a1), VertexSet(n, b1)};
  }
  return std::nullopt;
}

}  // namespace brickwork
