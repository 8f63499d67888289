#include "brickwork/cuts.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <unordered_map>

#include "brickwork/errors.hpp"

namespace brickwork {

namespace {

using Mask = std::uint64_t;

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Orders canonical shores: size, then member list.
bool shore_less(Mask a, Mask b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  // Lexicographic on sorted members: the first differing vertex decides,
  // and the set holding it is smaller.
  const Mask diff = a ^ b;
  const Mask low = diff & (~diff + 1);
  return (a & low) != 0;
}

Mask canonical_bits(Mask x, int n) {
  const Mask c = full_mask(n) & ~x;
  const int px = std::popcount(x);
  const int pc = n - px;
  if (px != pc) return px < pc ? x : c;
  return (x & 1) ? x : c;
}

void sort_shores(std::vector<Mask>& shores, ShorePolicy policy) {
  std::sort(shores.begin(), shores.end(), shore_less);
  shores.erase(std::unique(shores.begin(), shores.end()), shores.end());
  if (policy == ShorePolicy::largest) std::reverse(shores.begin(), shores.end());
}

void require_size(const MultiGraph& g) {
  if (g.vertex_count() > VertexSet::kMaxVertices) {
    throw PreconditionError("cut routines support at most 64 vertices");
  }
}

void require_budget(const MultiGraph& g, const Budget& budget, const char* what) {
  if (g.vertex_count() > budget.solid_max_n) {
    throw BudgetExceeded(std::string(what) + " is limited to " + std::to_string(budget.solid_max_n) +
                         " vertices, graph has " + std::to_string(g.vertex_count()));
  }
}

/// Tightness oracle for one graph: the matching index when available,
/// otherwise the full list of perfect matchings.
class TightnessOracle {
 public:
  TightnessOracle(const MultiGraph& g, std::size_t cap) : g_(g) {
    if (PerfectMatchingIndex::supports(g)) {
      index_.emplace(g, cap);
    } else {
      pms_ = enumerate_perfect_matchings(g, cap);
    }
    if (g.vertex_count() <= 64) {
      if (index_) {
        for (const auto& pm : index_->matchings()) {
          std::vector<Mask> pairs;
          for (int p = 0; p < index_->pair_count(); ++p) {
            if (pm.test(p)) pairs.push_back((Mask{1} << index_->pair(p).first) | (Mask{1} << index_->pair(p).second));
          }
          pair_masks_.push_back(std::move(pairs));
        }
      } else {
        for (const Matching& m : pms_) {
          std::vector<Mask> pairs;
          for (EdgeId id : m) pairs.push_back((Mask{1} << g.edge(id).u) | (Mask{1} << g.edge(id).v));
          pair_masks_.push_back(std::move(pairs));
        }
      }
    }
  }

  /// Tightness of ∂(X) for odd X, starting from the last witness found.
  bool tight_bits(Mask x) const {
    const std::size_t count = pair_masks_.size();
    for (std::size_t step = 0; step < count; ++step) {
      const std::size_t i = (last_ + step) % count;
      int crossing = 0;
      for (Mask p : pair_masks_[i]) {
        const Mask in = p & x;
        crossing += in != 0 && in != p;
      }
      if (crossing != 1) {
        last_ = i;
        return false;
      }
    }
    return true;
  }

  /// A PM meeting ∂(X) in other than one edge, if any.
  std::optional<Matching> witness(const VertexSet& x) const {
    if (index_) {
      auto i = index_->non_tight_witness(index_->cut_mask(x));
      if (!i) return std::nullopt;
      return index_->to_matching(index_->matchings()[*i]);
    }
    for (const Matching& m : pms_) {
      int crossing = 0;
      for (EdgeId id : m) {
        const Edge& e = g_.edge(id);
        crossing += x.contains(e.u) != x.contains(e.v);
      }
      if (crossing != 1) return m;
    }
    return std::nullopt;
  }

  bool tight(const VertexSet& x) const { return !witness(x); }

  /// Some perfect matching, or nullopt if none exists.
  std::optional<std::vector<std::pair<Vertex, Vertex>>> any_matching() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    if (index_) {
      if (index_->matchings().empty()) return std::nullopt;
      const auto& pm = index_->matchings().front();
      for (int p = 0; p < index_->pair_count(); ++p) {
        if (pm.test(p)) out.push_back(index_->pair(p));
      }
      return out;
    }
    if (pms_.empty()) return std::nullopt;
    for (EdgeId id : pms_.front()) out.emplace_back(g_.edge(id).u, g_.edge(id).v);
    return out;
  }

 private:
  const MultiGraph& g_;
  std::optional<PerfectMatchingIndex> index_;
  std::vector<Matching> pms_;
  std::vector<std::vector<Mask>> pair_masks_;
  mutable std::size_t last_ = 0;
};

/// Candidate shores for a tight cut: a tight cut meets the perfect matching
/// M0 once, so X is a union of M0 pairs plus one end of another pair.
std::vector<Mask> tight_candidates(int n, const std::vector<std::pair<Vertex, Vertex>>& m0) {
  const int pairs = static_cast<int>(m0.size());
  std::vector<Mask> out;
  if (pairs <= 16) out.reserve(static_cast<std::size_t>(pairs) << pairs);
  for (int i = 0; i < pairs; ++i) {
    std::vector<Mask> others;
    for (int j = 0; j < pairs; ++j) {
      if (j != i) others.push_back((Mask{1} << m0[j].first) | (Mask{1} << m0[j].second));
    }
    const int k = static_cast<int>(others.size());
    // Gray code walk: one pair enters or leaves per step.
    Mask body = 0;
    int chosen = 0;
    for (Mask step = 1; step < (Mask{1} << k); ++step) {
      const int flip = std::countr_zero(step);
      body ^= others[flip];
      chosen += (body & others[flip]) ? 1 : -1;
      const int size = 2 * chosen + 1;
      if (size > n - 3) continue;
      for (Vertex end : {m0[i].first, m0[i].second}) {
        const Mask x = body | (Mask{1} << end);
        const bool keep = 2 * size < n || (2 * size == n && (x & 1));
        out.push_back(keep ? x : full_mask(n) & ~x);
      }
    }
  }
  return out;
}

}  // namespace

VertexSet canonical_shore(const VertexSet& x) {
  return VertexSet(x.universe(), canonical_bits(x.bits(), x.universe()));
}

std::vector<VertexSet> nontrivial_odd_shores(int n) {
  if (n > 30) throw PreconditionError("shore enumeration is limited to 30 vertices");
  std::vector<Mask> masks;
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    const int size = std::popcount(x);
    if (size % 2 == 0 || size < 3 || size > n - 3) continue;
    if (canonical_bits(x, n) == x) masks.push_back(x);
  }
  sort_shores(masks, ShorePolicy::smallest);
  std::vector<VertexSet> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.emplace_back(n, m);
  return out;
}

CutReport classify_cut(const MultiGraph& g, const VertexSet& x, const Budget& budget) {
  require_size(g);
  CutReport r;
  r.shore = x;
  r.cut = edge_cut(g, x);
  r.trivial = x.size() == 1 || x.size() == g.vertex_count() - 1;
  TightnessOracle oracle(g, budget.pm_cap);
  r.non_tight_witness = oracle.witness(x);
  r.tight = !r.non_tight_witness;
  r.shore_contracted_mc = is_matching_covered(contract(g, x).graph);
  r.complement_contracted_mc = is_matching_covered(contract(g, x.complement()).graph);
  r.separating = r.shore_contracted_mc && r.complement_contracted_mc;
  if (r.separating && !r.tight) {
    r.shore_contracted_bricks = brick_count(contract(g, x).graph);
    r.complement_contracted_bricks = brick_count(contract(g, x.complement()).graph);
    r.robust = *r.shore_contracted_bricks == 1 && *r.complement_contracted_bricks == 1;
  }
  return r;
}

std::optional<VertexSet> find_nontrivial_tight_cut(const MultiGraph& g, ShorePolicy policy) {
  require_size(g);
  const int n = g.vertex_count();
  if (n < 6) return std::nullopt;
  TightnessOracle oracle(g, Budget{}.pm_cap);
  auto m0 = oracle.any_matching();
  if (!m0) throw PreconditionError("tight cuts are defined for graphs with a perfect matching");
  std::optional<Mask> best;
  for (Mask x : tight_candidates(n, *m0)) {
    if (!oracle.tight_bits(x)) continue;
    if (!best || (policy == ShorePolicy::smallest ? shore_less(x, *best) : shore_less(*best, x))) best = x;
  }
  if (!best) return std::nullopt;
  return VertexSet(n, *best);
}

namespace reference {

std::optional<VertexSet> find_nontrivial_tight_cut(const MultiGraph& g, ShorePolicy policy) {
  const int n = g.vertex_count();
  if (n < 6) return std::nullopt;
  const auto pms = enumerate_perfect_matchings(g, Budget{}.pm_cap);
  if (pms.empty()) throw PreconditionError("tight cuts are defined for graphs with a perfect matching");
  auto shores = nontrivial_odd_shores(n);
  if (policy == ShorePolicy::largest) std::reverse(shores.begin(), shores.end());
  for (const VertexSet& x : shores) {
    const bool tight = std::all_of(pms.begin(), pms.end(), [&](const Matching& m) {
      int crossing = 0;
      for (EdgeId id : m) crossing += x.contains(g.edge(id).u) != x.contains(g.edge(id).v);
      return crossing == 1;
    });
    if (tight) return x;
  }
  return std::nullopt;
}

}  // namespace reference

bool is_brick(const MultiGraph& g) {
  return is_matching_covered(g) && !is_bipartite(g) && !find_nontrivial_tight_cut(g);
}

bool is_brace(const MultiGraph& g) {
  return is_matching_covered(g) && is_bipartite(g) && !find_nontrivial_tight_cut(g);
}

int Decomposition::brick_count() const {
  return static_cast<int>(std::count_if(leaves.begin(), leaves.end(),
                                        [](const DecompositionLeaf& l) { return l.brick; }));
}

Decomposition tight_cut_decomposition(const MultiGraph& g, ShorePolicy policy) {
  if (!is_matching_covered(g)) {
    throw PreconditionError("tight cut decomposition needs a matching covered graph");
  }
  Decomposition d;
  auto rec = [&](auto&& self, const MultiGraph& h, int parent) -> void {
    auto shore = find_nontrivial_tight_cut(h, policy);
    if (!shore) {
      d.leaves.push_back({h, !is_bipartite(h)});
      return;
    }
    const int step = static_cast<int>(d.steps.size());
    d.steps.push_back({parent, h.vertex_count(), *shore});
    self(self, contract(h, *shore).graph, step);
    self(self, contract(h, shore->complement()).graph, step);
  };
  rec(rec, g, -1);
  return d;
}

int brick_count(const MultiGraph& g, ShorePolicy policy) {
  return tight_cut_decomposition(g, policy).brick_count();
}

bool is_near_brick(const MultiGraph& g) { return is_matching_covered(g) && brick_count(g) == 1; }

namespace {

/// Classifies every nontrivial odd cut in canonical order and stops at the
/// first one accepted by `stop`.
template <typename Stop>
std::optional<CutReport> scan_cuts(const MultiGraph& g, const Budget& budget, Stop stop) {
  TightnessOracle oracle(g, budget.pm_cap);
  for (const VertexSet& x : nontrivial_odd_shores(g.vertex_count())) {
    CutReport r;
    r.shore = x;
    r.non_tight_witness = oracle.witness(x);
    r.tight = !r.non_tight_witness;
    if (r.tight) continue;
    r.shore_contracted_mc = is_matching_covered(contract(g, x).graph);
    if (!r.shore_contracted_mc) continue;
    r.complement_contracted_mc = is_matching_covered(contract(g, x.complement()).graph);
    r.separating = r.complement_contracted_mc;
    if (!r.separating) continue;
    if (stop(g, r)) {
      r.cut = edge_cut(g, x);
      return r;
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_solid(const MultiGraph& g, const Budget& budget) {
  require_budget(g, budget, "solidity");
  return !scan_cuts(g, budget, [](const MultiGraph&, CutReport&) { return true; });
}

std::optional<CutReport> find_robust_cut(const MultiGraph& g, const Budget& budget) {
  require_budget(g, budget, "robust cut search");
  return scan_cuts(g, budget, [](const MultiGraph& host, CutReport& r) {
    r.shore_contracted_bricks = brick_count(contract(host, r.shore).graph);
    if (*r.shore_contracted_bricks != 1) return false;
    r.complement_contracted_bricks = brick_count(contract(host, r.shore.complement()).graph);
    r.robust = *r.complement_contracted_bricks == 1;
    return r.robust;
  });
}

DoubleContraction contract_both(const MultiGraph& g, const VertexSet& a, const VertexSet& b) {
  if ((a.bits() & b.bits()) != 0) throw PreconditionError("contracted sets must be disjoint");
  if (a.empty() || b.empty()) throw PreconditionError("contracted sets must be nonempty");
  const Contraction first = contract(g, a);
  VertexSet b_image = VertexSet::none(first.graph.vertex_count());
  for (Vertex v : b.members()) b_image.insert(first.vertex_map[v]);
  const Contraction second = contract(first.graph, b_image);
  DoubleContraction out;
  out.graph = second.graph;
  out.vertex_map.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out.vertex_map[v] = second.vertex_map[first.vertex_map[v]];
  }
  out.a = second.vertex_map[first.contracted];
  out.b = second.contracted;
  return out;
}

std::optional<Refinement> robust_refinement(const MultiGraph& g, const VertexSet& x,
                                            const Budget& budget) {
  require_budget(g, budget, "robust refinement");
  const int n = g.vertex_count();
  const Mask all = full_mask(n);
  const Mask xb = x.bits();

  // Odd subsets of X with at least 3 vertices, and odd-complement supersets.
  std::map<int, std::vector<Mask>> inner;  // by |X| - |X'|
  std::map<int, std::vector<Mask>> outer;  // by |X''| - |X|
  std::vector<Vertex> in_x = x.members();
  std::vector<Vertex> out_x = x.complement().members();
  for (Mask sub = 0; sub < (Mask{1} << in_x.size()); ++sub) {
    Mask s = 0;
    for (Mask b = sub; b != 0; b &= b - 1) s |= Mask{1} << in_x[std::countr_zero(b)];
    const int size = std::popcount(s);
    if (size >= 3 && size % 2 == 1) inner[x.size() - size].push_back(s);
  }
  for (Mask sub = 0; sub < (Mask{1} << out_x.size()); ++sub) {
    Mask s = xb;
    for (Mask b = sub; b != 0; b &= b - 1) s |= Mask{1} << out_x[std::countr_zero(b)];
    const int rest = n - std::popcount(s);
    if (rest >= 3 && rest % 2 == 1) outer[std::popcount(s) - x.size()].push_back(s);
  }
  for (auto* family : {&inner, &outer}) {
    for (auto& [d, list] : *family) std::sort(list.begin(), list.end(), shore_less);
  }

  std::unordered_map<Mask, bool> brick_memo;
  auto contracted_brick = [&](Mask contracted) {
    auto it = brick_memo.find(contracted);
    if (it != brick_memo.end()) return it->second;
    const bool b = is_brick(contract(g, VertexSet(n, contracted)).graph);
    brick_memo.emplace(contracted, b);
    return b;
  };

  const int max_inner = inner.empty() ? -1 : inner.rbegin()->first;
  const int max_outer = outer.empty() ? -1 : outer.rbegin()->first;
  for (int total = 0; total <= max_inner + max_outer; ++total) {
    for (const auto& [di, xs] : inner) {
      auto it = outer.find(total - di);
      if (it == outer.end()) continue;
      for (Mask xp : xs) {
        if (!contracted_brick(all & ~xp)) continue;
        for (Mask xpp : it->second) {
          if (!contracted_brick(xpp)) continue;
          DoubleContraction dc = contract_both(g, VertexSet(n, xp), VertexSet(n, all & ~xpp));
          if (!is_matching_covered(dc.graph)) continue;
          const auto parts = bipartition(dc.graph);
          if (!parts.classes) continue;
          if (parts.classes->a.contains(dc.a) == parts.classes->a.contains(dc.b)) continue;
          return Refinement{VertexSet(n, xp), VertexSet(n, xpp), std::move(dc.graph), dc.a, dc.b};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace brickwork
