#pragma once

#include <optional>
#include <vector>

#include "brickwork/budget.hpp"
#include "brickwork/graph.hpp"
#include "brickwork/matching.hpp"

namespace brickwork {

/// G/X denotes G with the shore X contracted to one vertex (see contract()).
struct CutReport {
  VertexSet shore;
  std::vector<EdgeId> cut;
  bool trivial = false;
  bool separating = false;
  bool tight = false;
  bool robust = false;
  /// A perfect matching of G meeting the cut in other than one edge.
  std::optional<Matching> non_tight_witness;
  bool shore_contracted_mc = false;       // G/X matching covered
  bool complement_contracted_mc = false;  // G/(complement of X) matching covered
  /// b(G/X) and b(G/X̄); filled when the cut is separating and not tight.
  std::optional<int> shore_contracted_bricks;
  std::optional<int> complement_contracted_bricks;
};

/// G must be matching covered. Throws BudgetExceeded if G has more than
/// budget.pm_cap perfect matchings.
CutReport classify_cut(const MultiGraph& g, const VertexSet& x, const Budget& budget = {});

/// Shores of a cut are compared through the smaller one (the one holding the
/// lowest vertex when both have equal size), by size and then member list.
enum class ShorePolicy { smallest, largest };

/// Representative shore of the cut ∂(X), as used by ShorePolicy.
VertexSet canonical_shore(const VertexSet& x);

/// Every odd shore X with 3 <= |X| <= n-3, one per cut, in ascending
/// canonical order.
std::vector<VertexSet> nontrivial_odd_shores(int n);

/// G matching covered. Returns the canonical shore of the first nontrivial
/// tight cut under `policy`.
std::optional<VertexSet> find_nontrivial_tight_cut(const MultiGraph& g,
                                                   ShorePolicy policy = ShorePolicy::smallest);

bool is_brick(const MultiGraph& g);
bool is_brace(const MultiGraph& g);

struct DecompositionLeaf {
  MultiGraph graph;
  bool brick = false;  // otherwise a brace
};
struct DecompositionStep {
  int parent = -1;  // index of the step that produced the split graph, -1 at the root
  int vertex_count = 0;
  VertexSet shore;  // canonical shore of the tight cut, in the split graph
};
struct Decomposition {
  std::vector<DecompositionLeaf> leaves;
  std::vector<DecompositionStep> steps;
  int brick_count() const;
};

/// Splits on nontrivial tight cuts until only bricks and braces remain.
/// G must be matching covered.
Decomposition tight_cut_decomposition(const MultiGraph& g,
                                      ShorePolicy policy = ShorePolicy::smallest);
/// b(G); G must be matching covered.
int brick_count(const MultiGraph& g, ShorePolicy policy = ShorePolicy::smallest);
bool is_near_brick(const MultiGraph& g);

/// Every separating cut is tight. Throws BudgetExceeded for n > solid_max_n.
bool is_solid(const MultiGraph& g, const Budget& budget = {});
/// First robust cut in canonical shore order. Same budget rule as is_solid.
std::optional<CutReport> find_robust_cut(const MultiGraph& g, const Budget& budget = {});

struct Refinement {
  VertexSet x_prime;         // subset of X; G/(complement of X') is a brick
  VertexSet x_double_prime;  // superset of X; G/X'' is a brick
  /// G with X' and the complement of X'' contracted; bipartite matching covered.
  MultiGraph h;
  Vertex h_x_prime = 0;
  Vertex h_x_double_prime_bar = 0;
};

/// Searches X' ⊆ X and X'' ⊇ X (both nontrivial odd shores) in order of
/// total distance from X and returns the first witness. Same budget rule as
/// is_solid.
std::optional<Refinement> robust_refinement(const MultiGraph& g, const VertexSet& x,
                                            const Budget& budget = {});

/// Contracts A to a and then B to b (disjoint, nonempty). Returns the graph
/// with a and b as its second-to-last and last vertices.
struct DoubleContraction {
  MultiGraph graph;
  std::vector<Vertex> vertex_map;
  Vertex a = 0;
  Vertex b = 0;
};
DoubleContraction contract_both(const MultiGraph& g, const VertexSet& a, const VertexSet& b);

namespace reference {
/// Same contract as the fast search, testing every odd shore against the
/// full list of perfect matchings.
std::optional<VertexSet> find_nontrivial_tight_cut(const MultiGraph& g,
                                                   ShorePolicy policy = ShorePolicy::smallest);
}  // namespace reference

}  // namespace brickwork
