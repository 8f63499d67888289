#pragma once

#include <span>
#include <string>
#include <vector>

#include "brickwork/graph.hpp"

namespace brickwork {

/// Canonical labelling by colour refinement plus individualisation
/// backtracking. Exact for any graph; meant for the desk-scale orders used
/// here (the search is exponential on highly symmetric graphs without twins).
struct CanonicalLabeling {
  /// position[v] is the canonical index of vertex v.
  std::vector<Vertex> position;
  /// Equal exactly for isomorphic (coloured) multigraphs.
  std::string certificate;
};

/// `colours` (optional, one per vertex) must be preserved by isomorphisms.
CanonicalLabeling canonical_labeling(const MultiGraph& g, std::span<const int> colours = {});

/// Copy of G with vertex v renamed position[v]; edges are re-emitted in
/// lexicographic order of their new endpoints with dense ids.
MultiGraph relabel(const MultiGraph& g, std::span<const Vertex> position);

/// Printable canonical key: graph6 of the canonical relabelling for simple
/// graphs, sparse6 for multigraphs.
std::string canonical_code(const MultiGraph& g);

bool isomorphic(const MultiGraph& a, const MultiGraph& b);

}  // namespace brickwork
