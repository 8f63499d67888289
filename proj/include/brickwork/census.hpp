#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "brickwork/budget.hpp"
#include "brickwork/graph.hpp"
#include "brickwork/removable.hpp"

namespace brickwork {

/// Connected simple graphs on n vertices (1 <= n <= 8), one per isomorphism
/// class, each relabelled canonically and ordered by canonical code.
/// Larger orders must be streamed in as graph6.
std::vector<MultiGraph> generate_connected_graphs(int n, int workers = 1);

struct AnalysisReport {
  MultiGraph graph;  // as given; hubs and classes refer to this labelling
  std::string canonical;
  int n = 0;
  int m = 0;
  int max_degree = 0;
  bool matching_covered = false;
  bool bipartite = false;
  bool brick = false;
  bool brace = false;
  bool planar = false;
  /// Bricks only; empty when not applicable or refused (see notes).
  std::optional<bool> solid;
  std::optional<bool> robust_cut;
  bool near_bipartite = false;
  bool wheel_like = false;  // implies brick
  /// Matching covered graphs only.
  std::vector<Vertex> hubs;
  std::vector<RemovableClass> classes;
  std::optional<int> b;
  /// Budget refusals, one line per field.
  std::vector<std::string> notes;
  std::optional<double> millis;

  int removable_edge_count() const;
  int doubleton_count() const;
};

AnalysisReport analyze(const MultiGraph& g, const Budget& budget = {}, bool timings = false);

struct CensusConfig {
  int workers = 1;
  Budget budget;
  bool timings = false;
};

/// Drops repeated isomorphism classes (first occurrence wins) and returns
/// the reports ordered by canonical code. OpenMP across graphs.
std::vector<AnalysisReport> analyze_all(std::span<const MultiGraph> graphs, const CensusConfig& config);

namespace reference {
/// Single-threaded analyze_all.
std::vector<AnalysisReport> analyze_all(std::span<const MultiGraph> graphs, const CensusConfig& config);
}  // namespace reference

std::string csv_header(bool timings);
std::string csv_row(const AnalysisReport& r, bool timings);
nlohmann::json to_json(const AnalysisReport& r);

struct Counterexample {
  std::string graph;  // canonical code
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::size_t checked = 0;  // instances meeting the hypothesis
  std::size_t skipped = 0;  // refused for budget
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> skip_reasons;
  nlohmann::json data = nlohmann::json::object();

  bool passed() const { return counterexamples.empty(); }
  bool complete() const { return skipped == 0; }
};

nlohmann::json to_json(const SuiteResult& s);

/// Every planar wheel-like brick among the reports is an odd wheel whose
/// parallel classes all meet one hub. data.wheel_like lists their codes.
SuiteResult verify_main_theorem(std::span<const AnalysisReport> reports);

/// Multigraph clause on the wheel-like planar bricks of `reports`: every
/// doubling of a set of spokes at a hub stays wheel-like with its parallel
/// classes at a hub; doubling single edges never breaks the theorem.
SuiteResult verify_multigraph_clause(std::span<const AnalysisReport> reports, const CensusConfig& config);

/// Bricks have at least Δ(G) removable classes. data.min_removable_edges
/// records the smallest number of removable edges per order.
SuiteResult verify_delta_bound(std::span<const AnalysisReport> reports);

// Splicings of two odd wheels.

enum class Attachment { hub, rim };

/// Odd wheel with spoke multiplicities, spliced at its hub or at rim vertex 0.
struct WheelOperand {
  int k = 3;
  std::vector<int> spokes;
  Attachment at = Attachment::hub;

  MultiGraph graph() const;  // odd_wheel(k, spokes)
  Vertex vertex() const;     // hub k or rim vertex 0
};

struct WiWjInstance {
  WheelOperand g;
  WheelOperand h;
  /// One entry per spliced edge: (neighbour of u in G, neighbour of v in H).
  std::vector<std::pair<Vertex, Vertex>> joins;

  /// Hub-to-rim instances: rim offset of u_r from u_1 plus one, where u_1
  /// and u_r are joined to the rim neighbours v_1 and v_(t-1) of v.
  std::optional<int> r() const;
};

/// Splice realising the instance; G's side is `g_side`.
SpliceResult wiwj_splice(const WiWjInstance& inst);

/// Closed form: exactly one attachment is a hub, the hub side has at least
/// six vertices, all parallel edges meet the hubs, and u_1, u_r are distinct
/// and nonadjacent.
bool wiwj_closed_form(const WiWjInstance& inst);

/// Closed form, or nullopt when the splice is not a brick.
std::optional<bool> wiwj_predicate(const WiWjInstance& inst);

struct WiWjBounds {
  int max_wheel = 7;        // rim lengths 3, 5, ..., max_wheel
  int max_multiplicity = 2;  // spokes other than a rim attachment's
};

/// Instances up to rim symmetry: hub-rim (hub side listed first), hub-hub and
/// rim-rim (s <= t). The spoke at a rim attachment carries the multiplicity
/// forced by degree compatibility.
std::vector<WiWjInstance> wiwj_instances(const WiWjBounds& bounds);

/// Predicate against brute-force is_wheel_like, and nonplanarity of every
/// wheel-like instance with a validated K3,3 witness.
SuiteResult wiwj_census(const WiWjBounds& bounds, const CensusConfig& config);

/// A splice of two bricks, kept with its operands.
struct SpliceInstance {
  MultiGraph g;
  Vertex u = 0;
  MultiGraph h;
  Vertex v = 0;
  SpliceResult result;
};

/// All splicings of corpus bricks on at most `max_n` vertices at every pair
/// of equal-degree vertices under every bijection, one per coloured
/// isomorphism class, plus the hub-rim wheel splicings with rims up to 5.
std::vector<SpliceInstance> constructed_splices(std::span<const AnalysisReport> corpus, int max_n,
                                                int workers);

/// Lemma suites over the corpus reports (usually all connected graphs on at
/// most 8 vertices).
std::vector<SuiteResult> lemma_suites(std::span<const AnalysisReport> corpus, const CensusConfig& config);

/// Blossom vs exhaustive matching, b(G) under both shore policies, and
/// graph6 round trips.
SuiteResult engine_cross_validation(std::span<const AnalysisReport> corpus,
                                    std::span<const SpliceInstance> constructed,
                                    const CensusConfig& config);

}  // namespace brickwork
