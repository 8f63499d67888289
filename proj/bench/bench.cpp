// Serial reference vs OpenMP census, and fast kernels vs their references.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "brickwork/census.hpp"
#include "brickwork/cuts.hpp"
#include "brickwork/removable.hpp"

using namespace brickwork;

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& name, double base, double fast) {
  std::printf("%-34s %10.3f s %10.3f s %8.2fx\n", name.c_str(), base, fast, fast > 0 ? base / fast : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"brickwork benchmarks"};
  int n = 7;
  int workers = 4;
  app.add_option("--n", n, "order of the generated graphs")->check(CLI::Range(2, 8));
  app.add_option("--workers", workers, "OpenMP threads for the parallel run")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  std::vector<MultiGraph> graphs;
  const double gen = seconds([&] {
    for (int k = 1; k <= n; ++k) {
      for (MultiGraph& g : generate_connected_graphs(k, workers)) graphs.push_back(std::move(g));
    }
  });
  std::printf("%zu connected graphs on at most %d vertices (%.3f s)\n\n", graphs.size(), n, gen);
  std::printf("%-34s %12s %12s %9s\n", "", "reference", "fast", "speedup");

  CensusConfig parallel;
  parallel.workers = workers;
  std::vector<AnalysisReport> serial_reports;
  std::vector<AnalysisReport> parallel_reports;
  const double s = seconds([&] { serial_reports = reference::analyze_all(graphs, {}); });
  const double p = seconds([&] { parallel_reports = analyze_all(graphs, parallel); });
  row("analyze_all (" + std::to_string(workers) + " threads)", s, p);

  std::vector<const MultiGraph*> covered;
  std::vector<const MultiGraph*> bricks;
  for (const AnalysisReport& r : serial_reports) {
    if (r.matching_covered) covered.push_back(&r.graph);
    if (r.brick) bricks.push_back(&r.graph);
  }
  std::size_t sink = 0;
  const double rc_ref = seconds([&] {
    for (const MultiGraph* g : covered) sink += reference::removable_classes(*g).size();
  });
  const double rc = seconds([&] {
    for (const MultiGraph* g : covered) sink += removable_classes(*g).size();
  });
  row("removable_classes", rc_ref, rc);
  const double tc_ref = seconds([&] {
    for (const MultiGraph* g : covered) sink += reference::find_nontrivial_tight_cut(*g).has_value();
  });
  const double tc = seconds([&] {
    for (const MultiGraph* g : covered) sink += find_nontrivial_tight_cut(*g).has_value();
  });
  row("find_nontrivial_tight_cut", tc_ref, tc);

  bool same = serial_reports.size() == parallel_reports.size();
  for (std::size_t i = 0; same && i < serial_reports.size(); ++i) {
    same = csv_row(serial_reports[i], false) == csv_row(parallel_reports[i], false);
  }
  std::printf("\n%zu matching covered, %zu bricks; serial and parallel reports %s (%zu)\n", covered.size(),
              bricks.size(), same ? "identical" : "DIFFER", sink);
  return same ? 0 : 1;
}
