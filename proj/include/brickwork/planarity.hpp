#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "brickwork/graph.hpp"

namespace brickwork {

/// Decided on the underlying simple graph (Boyer-Myrvold).
bool is_planar(const MultiGraph& g);

enum class KuratowskiKind { k5, k33 };

struct KuratowskiWitness {
  KuratowskiKind kind = KuratowskiKind::k33;
  /// K5: the five branch vertices. K3,3: one colour class, then the other.
  std::vector<Vertex> branch;
  /// One path per edge of K5 / K3,3, as vertex sequences between branch
  /// vertices, ordered by (first branch index, second branch index).
  std::vector<std::vector<Vertex>> paths;
};

struct WitnessSearch {
  std::size_t max_steps = 20'000'000;
  /// Colour class tried first for K3,3 (e.g. {u1, ur, vh} for a spliced
  /// pair of wheels). Only affects speed and which witness is reported.
  std::vector<Vertex> k33_class_hint;
};

/// Subdivision of K5 or K3,3 found by choosing branch vertices and routing
/// internally disjoint paths. Independent of is_planar. Returns nullopt
/// when the exhaustive search finds none, and throws BudgetExceeded when it
/// runs out of steps first.
std::optional<KuratowskiWitness> kuratowski_witness(const MultiGraph& g,
                                                    const WitnessSearch& search = {});

/// Empty string when the witness is a valid subdivision inside G, otherwise
/// the first problem found.
std::string validate_witness(const MultiGraph& g, const KuratowskiWitness& w);

}  // namespace brickwork
