#include "doctest.h"

#include <algorithm>

#include "brickwork/canon.hpp"
#include "brickwork/census.hpp"
#include "brickwork/cuts.hpp"
#include "brickwork/errors.hpp"
#include "brickwork/io.hpp"
#include "brickwork/named.hpp"
#include "brickwork/planarity.hpp"
#include "brickwork/removable.hpp"

using namespace brickwork;

namespace {

// W_s spliced at its hub to W_t at rim vertex 0; v's neighbours are 1, t-1
// and the hub t. `first` and `last` are the rim vertices of G joined to 1
// and t-1.
WiWjInstance hub_to_rim(int s, int t, Vertex first, Vertex last) {
  WiWjInstance inst;
  inst.g = {s, std::vector<int>(s, 1), Attachment::hub};
  std::vector<int> mh(t, 1);
  mh[0] = s - 2;
  inst.h = {t, mh, Attachment::rim};
  inst.joins = {{first, 1}, {last, t - 1}};
  for (Vertex x = 0; x < s; ++x) {
    if (x != first && x != last) inst.joins.emplace_back(x, t);
  }
  return inst;
}

}  // namespace

TEST_CASE("connected graph counts up to eight vertices") {
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    const auto gs = generate_connected_graphs(n);
    CHECK(gs.size() == expected[n - 1]);
    for (const MultiGraph& g : gs) CHECK(is_connected(g));
  }
  CHECK_THROWS_AS(generate_connected_graphs(9), PreconditionError);
}

TEST_CASE("generation is canonical and sorted") {
  const auto gs = generate_connected_graphs(6);
  std::vector<std::string> codes;
  for (const MultiGraph& g : gs) codes.push_back(canonical_code(g));
  CHECK(std::is_sorted(codes.begin(), codes.end()));
  CHECK(std::adjacent_find(codes.begin(), codes.end()) == codes.end());
  CHECK(generate_connected_graphs(6, 2).size() == gs.size());
}

TEST_CASE("analyze W5") {
  const AnalysisReport r = analyze(odd_wheel(5));
  CHECK(r.brick);
  CHECK(r.planar);
  CHECK(r.wheel_like);
  CHECK(r.hubs == std::vector<Vertex>{5});
  CHECK(r.b == 1);
  CHECK(r.removable_edge_count() == 5);
  CHECK(r.solid == true);
  CHECK(r.notes.empty());
}

TEST_CASE("analyze C6bar and R8") {
  const AnalysisReport c = analyze(named_graph("c6bar"));
  CHECK(c.brick);
  CHECK(c.near_bipartite);
  CHECK_FALSE(c.wheel_like);
  CHECK(c.solid == false);
  CHECK(c.robust_cut == true);
  CHECK(c.doubleton_count() == 3);
  CHECK(c.removable_edge_count() == 0);

  const AnalysisReport r = analyze(named_graph("r8"));
  CHECK(r.brick);
  CHECK(r.planar);
  CHECK(r.near_bipartite);
  CHECK(r.doubleton_count() == 2);
  CHECK(r.removable_edge_count() == 1);
}

TEST_CASE("analyze a bipartite graph") {
  const AnalysisReport r = analyze(cycle_graph(6));
  CHECK(r.matching_covered);
  CHECK(r.bipartite);
  CHECK_FALSE(r.brick);
  CHECK_FALSE(r.brace);  // {0,1,2} is a tight cut
  CHECK_FALSE(r.solid.has_value());
  const std::string row = csv_row(r, false);
  const std::string header = csv_header(false);
  CHECK(std::count(row.begin(), row.end(), ',') == std::count(header.begin(), header.end(), ','));
  CHECK(row.rfind(r.canonical + ",6,6,2,1,1,0,0,1,,,", 0) == 0);
}

TEST_CASE("hub-to-rim closed form against brute force") {
  // W5 hub into W5 rim, u_1 = 0 and u_r = 2: r = 3, nonadjacent.
  const WiWjInstance yes = hub_to_rim(5, 5, 0, 2);
  CHECK(yes.r() == 3);
  CHECK(wiwj_closed_form(yes));
  const MultiGraph g = wiwj_splice(yes).graph;
  CHECK(is_brick(g));
  CHECK(is_wheel_like(g));
  CHECK_FALSE(is_planar(g));
  CHECK(wiwj_predicate(yes) == true);

  // u_1 and u_r adjacent on the rim: r = 2.
  const WiWjInstance adjacent = hub_to_rim(5, 5, 0, 1);
  CHECK(adjacent.r() == 2);
  CHECK_FALSE(wiwj_closed_form(adjacent));
  const MultiGraph h = wiwj_splice(adjacent).graph;
  if (is_brick(h)) CHECK_FALSE(is_wheel_like(h));

  // The hub side is K4: too small.
  const WiWjInstance small = hub_to_rim(3, 5, 0, 1);
  CHECK_FALSE(wiwj_closed_form(small));
}

TEST_CASE("hub-to-hub splices are never covered by the closed form") {
  for (const WiWjInstance& inst : wiwj_instances({5, 1})) {
    if (inst.g.at == Attachment::hub && inst.h.at == Attachment::hub) {
      CHECK_FALSE(inst.r().has_value());
      CHECK_FALSE(wiwj_closed_form(inst));
    }
  }
}

TEST_CASE("small wheel census agrees with brute force") {
  const SuiteResult s = wiwj_census({5, 2}, {});
  CHECK(s.passed());
  CHECK(s.complete());
  CHECK(s.checked > 0);
}

TEST_CASE("serial and parallel analysis agree") {
  std::vector<MultiGraph> gs;
  for (int n = 2; n <= 6; n += 2) {
    for (MultiGraph& g : generate_connected_graphs(n)) gs.push_back(std::move(g));
  }
  gs.push_back(odd_wheel(5));  // repeat of an n = 6 graph
  CensusConfig parallel;
  parallel.workers = 4;
  const auto a = reference::analyze_all(gs, {});
  const auto b = analyze_all(gs, parallel);
  REQUIRE(a.size() == b.size());
  CHECK(a.size() == gs.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(csv_row(a[i], false) == csv_row(b[i], false));
    CHECK(to_json(a[i]).dump() == to_json(b[i]).dump());
  }
}

TEST_CASE("suites on graphs up to six vertices") {
  std::vector<MultiGraph> gs;
  for (int n = 1; n <= 6; ++n) {
    for (MultiGraph& g : generate_connected_graphs(n)) gs.push_back(std::move(g));
  }
  const auto reports = analyze_all(gs, {});
  const SuiteResult main = verify_main_theorem(reports);
  CHECK(main.passed());
  CHECK(main.data["wheel_like"] == nlohmann::json::array({canonical_code(complete_graph(4)), canonical_code(odd_wheel(5))}));
  CHECK(verify_delta_bound(reports).passed());
  CHECK(verify_multigraph_clause(reports, {}).passed());
}
