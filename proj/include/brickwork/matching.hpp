#pragma once

#include <bitset>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "brickwork/graph.hpp"

namespace brickwork {

/// Edge ids, ascending.
using Matching = std::vector<EdgeId>;

/// Maximum matching by Edmonds' blossom algorithm. Among parallel edges the
/// smallest id is used.
Matching max_matching(const MultiGraph& g);
/// Same size as max_matching, by memoised exhaustive search over vertex
/// subsets. Kept as an independent oracle; practical up to ~24 vertices.
Matching max_matching_exhaustive(const MultiGraph& g);

bool has_perfect_matching(const MultiGraph& g);
/// Perfect matching of G restricted to `alive` (G[alive] has one).
bool has_perfect_matching(const MultiGraph& g, const VertexSet& alive);

/// All perfect matchings, parallel edges counted separately. Order: the
/// lowest unmatched vertex is matched first, trying its edges by id.
/// Throws BudgetExceeded when more than `cap` exist.
std::vector<Matching> enumerate_perfect_matchings(const MultiGraph& g, std::size_t cap);

/// o(G - S).
int odd_components(const MultiGraph& g, const VertexSet& s);
/// o(G - S) <= |S| for every S, by brute force over all subsets.
bool satisfies_tutte_condition(const MultiGraph& g);
bool is_barrier(const MultiGraph& g, const VertexSet& s);

/// No perfect matching contains e; G must have a perfect matching.
bool is_forbidden(const MultiGraph& g, EdgeId e);
/// Smallest barrier containing u and v (ties broken lexicographically), if any.
std::optional<VertexSet> find_barrier_containing(const MultiGraph& g, Vertex u, Vertex v);

bool is_matching_covered(const MultiGraph& g);
bool is_bicritical(const MultiGraph& g);

namespace reference {
/// Edge by edge: has_perfect_matching(G - u - v) for every edge uv.
bool is_matching_covered(const MultiGraph& g);
}  // namespace reference

/// The perfect matchings of the underlying simple graph, each stored as a
/// mask over its adjacent pairs. Parallel edges share a pair, so matching
/// questions about G minus a set of edges reduce to masking: a pair is
/// dead once all its copies are deleted, and a PM of the smaller graph is
/// a stored PM avoiding every dead pair.
class PerfectMatchingIndex {
 public:
  static constexpr int kMaxPairs = 128;
  using PairMask = std::bitset<kMaxPairs>;

  /// Throws PreconditionError beyond kMaxPairs pairs and BudgetExceeded when
  /// more than `cap` matchings exist.
  PerfectMatchingIndex(const MultiGraph& g, std::size_t cap);

  static bool supports(const MultiGraph& g);

  const MultiGraph& graph() const { return g_; }
  int pair_count() const { return static_cast<int>(pairs_.size()); }
  std::pair<Vertex, Vertex> pair(int p) const { return pairs_[p]; }
  int pair_of(EdgeId e) const { return pair_of_edge_[e]; }
  const std::vector<PairMask>& matchings() const { return pms_; }
  /// The PM as edge ids, smallest id per pair.
  Matching to_matching(const PairMask& pm) const;

  /// Pairs whose copies are all in `deleted`.
  PairMask dead_pairs(std::span<const EdgeId> deleted) const;
  /// G - deleted is matching covered.
  bool matching_covered_without(std::span<const EdgeId> deleted) const;
  bool matching_covered() const { return matching_covered_without({}); }

  PairMask cut_mask(const VertexSet& x) const;
  /// Index of a PM meeting the cut in other than exactly one pair, if any.
  std::optional<std::size_t> non_tight_witness(const PairMask& cut) const;
  bool is_tight(const VertexSet& x) const { return !non_tight_witness(cut_mask(x)); }

 private:
  MultiGraph g_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::vector<int> pair_of_edge_;         // by edge id, -1 for gaps
  std::vector<int> copies_;               // edges per pair
  std::vector<EdgeId> first_edge_;        // smallest id per pair
  std::vector<PairMask> pms_;
  std::vector<std::vector<std::uint64_t>> pms_with_pair_;  // bitset over pms_
};

}  // namespace brickwork
