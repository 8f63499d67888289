// Acceptance criteria, one PASS/FAIL line each. Run with --criterion N for a
// single criterion; the exit status is nonzero if any selected line fails.
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "brickwork/canon.hpp"
#include "brickwork/census.hpp"
#include "brickwork/named.hpp"
#include "brickwork/removable.hpp"

using namespace brickwork;
namespace fs = std::filesystem;

namespace {

// Time limits, in seconds.
constexpr double kFixtureSeconds = 5.0;
constexpr double kMainTheoremSeconds = 600.0;
constexpr double kWiWjSeconds = 900.0;

int failures = 0;

void report(int criterion, bool ok, const std::string& what) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what << std::endl;
  if (!ok) ++failures;
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fixed(double x) {
  std::ostringstream s;
  s.precision(2);
  s << std::fixed << x;
  return s.str();
}

std::string list(const std::vector<Vertex>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string suite_line(const SuiteResult& s) {
  std::string line = s.name + ": checked " + std::to_string(s.checked) + ", counterexamples " +
                     std::to_string(s.counterexamples.size()) + ", skipped " + std::to_string(s.skipped);
  if (!s.counterexamples.empty()) {
    line += " (first: " + s.counterexamples.front().graph + " " + s.counterexamples.front().detail + ")";
  }
  return line;
}

struct Corpus {
  std::vector<AnalysisReport> reports;
  double seconds = 0;
};

const Corpus& corpus() {
  static const Corpus c = [] {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<MultiGraph> graphs;
    for (int n = 1; n <= 8; ++n) {
      for (MultiGraph& g : generate_connected_graphs(n)) graphs.push_back(std::move(g));
    }
    Corpus out;
    out.reports = analyze_all(graphs, {});
    out.seconds = since(t0);
    return out;
  }();
  return c;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(BRICKWORK_CLI) + " " + args;
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("brickwork_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

// 1. Fixture classifications.
void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  struct Wheel {
    const char* name;
    MultiGraph g;
    std::vector<Vertex> hubs;
  };
  const std::vector<Wheel> wheels{{"K4", complete_graph(4), {0, 1, 2, 3}},
                                  {"W5", odd_wheel(5), {5}},
                                  {"W7", odd_wheel(7), {7}}};
  for (const Wheel& w : wheels) {
    const AnalysisReport r = analyze(w.g);
    report(1, r.brick && r.wheel_like && r.hubs == w.hubs,
           std::string(w.name) + " wheel-like brick with hubs " + list(r.hubs) + " (expected " + list(w.hubs) + ")");
  }
  for (const char* name : {"c6bar", "r8"}) {
    const AnalysisReport r = analyze(named_graph(name));
    const int d = r.doubleton_count();
    const int e = r.removable_edge_count();
    report(1, r.brick && !r.wheel_like,
           std::string(name) + " is a brick and not wheel-like (brick " + std::to_string(r.brick) + ", wheel-like " +
               std::to_string(r.wheel_like) + ")");
    report(1, d == 3 && e >= 1,
           std::string(name) + " has 3 removable doubletons and at least one removable edge (found " +
               std::to_string(d) + " doubletons, " + std::to_string(e) + " edges)");
  }
  const double s = since(t0);
  report(1, s < kFixtureSeconds, "fixtures classified in " + fixed(s) + " s (limit " + fixed(kFixtureSeconds) + " s)");
}

// 2. Planar bricks on 4, 6, 8 vertices: the wheel-like ones are K4, W5, W7.
void criterion2() {
  const SuiteResult s = verify_main_theorem(corpus().reports);
  report(2, s.passed() && s.complete(), suite_line(s));
  std::set<std::string> found;
  for (const auto& code : s.data["wheel_like"]) found.insert(code.get<std::string>());
  const std::set<std::string> expected{canonical_code(complete_graph(4)), canonical_code(odd_wheel(5)),
                                       canonical_code(odd_wheel(7))};
  std::string codes;
  for (const auto& c : found) codes += " " + c;
  report(2, found == expected, "wheel-like planar bricks are exactly K4, W5, W7 (found" + codes + ")");
  std::size_t planar_bricks = 0;
  std::set<int> orders;
  for (const AnalysisReport& r : corpus().reports) {
    if (r.brick && r.planar) {
      ++planar_bricks;
      orders.insert(r.n);
    }
  }
  report(2, orders == std::set<int>{4, 6, 8},
         std::to_string(planar_bricks) + " simple planar bricks, on 4, 6 and 8 vertices");
  const auto t0 = std::chrono::steady_clock::now();
  const int code = run_cli("verify --suite main-theorem --max-n 8 --out " + (scratch() / "main.json").string() +
                           " 2>/dev/null");
  const double secs = since(t0);
  report(2, code == 0 && secs < kMainTheoremSeconds,
         "brickwork verify --suite main-theorem --max-n 8 exits " + std::to_string(code) + " in " + fixed(secs) +
             " s (limit " + fixed(kMainTheoremSeconds) + " s)");
}

// 3. Multigraph clause.
void criterion3() {
  const SuiteResult s = verify_multigraph_clause(corpus().reports, {});
  report(3, s.passed() && s.complete() && s.checked > 0, suite_line(s) + ", data " + s.data.dump());
}

// 4. At least Δ(G) removable classes.
void criterion4() {
  const SuiteResult s = verify_delta_bound(corpus().reports);
  report(4, s.passed() && s.complete() && s.checked > 0, suite_line(s));
}

// 5. Splicings of odd wheels up to W7.
void criterion5() {
  const auto t0 = std::chrono::steady_clock::now();
  const SuiteResult s = wiwj_census({7, 2}, {});
  const double secs = since(t0);
  report(5, s.passed() && s.complete() && s.checked > 0, suite_line(s));
  report(5, s.data.value("validated_witnesses", 0) == s.data.value("wheel_like_graphs", -1),
         "every wheel-like splice has a validated Kuratowski witness (" +
             std::to_string(s.data.value("validated_witnesses", 0)) + " graphs)");
  report(5, secs < kWiWjSeconds, "census took " + fixed(secs) + " s (limit " + fixed(kWiWjSeconds) + " s)");
}

// 6. Lemma suites.
void criterion6() {
  const std::vector<SuiteResult> suites = lemma_suites(corpus().reports, {});
  for (const SuiteResult& s : suites) {
    if (s.name == "engine-cross-validation") continue;
    bool ok = s.passed() && s.complete() && s.checked > 0;
    if (s.name == "splice-preserves-matching-covered") ok = ok && s.checked >= 1000;
    report(6, ok, suite_line(s));
  }
}

// 7. Engine cross-validation.
void criterion7() {
  const auto constructed = constructed_splices(corpus().reports, 6, 1);
  const SuiteResult s = engine_cross_validation(corpus().reports, constructed, {});
  int largest = 0;
  for (const SpliceInstance& inst : constructed) largest = std::max(largest, inst.result.graph.vertex_count());
  report(7, s.passed() && s.complete() && s.checked > 0, suite_line(s));
  report(7, largest == 10, "corpus reaches " + std::to_string(largest) + " vertices");
}

// 8. Byte-identical reports across worker counts.
void criterion8() {
  struct Run {
    std::string suite;
    std::string args;
  };
  const std::vector<Run> runs{{"main-theorem", "--max-n 8"},
                              {"delta-bound", "--max-n 8"},
                              {"lemmas", "--max-n 8"},
                              {"wiwj", "--max-wheel 5"}};
  for (const Run& r : runs) {
    std::vector<std::string> outputs;
    std::vector<int> codes;
    for (int workers : {1, 3}) {
      const fs::path json = scratch() / (r.suite + "_" + std::to_string(workers) + ".json");
      const fs::path csv = scratch() / (r.suite + "_" + std::to_string(workers) + ".csv");
      const std::string csv_arg = r.suite == "wiwj" ? "" : " --csv " + csv.string();
      codes.push_back(run_cli("--workers " + std::to_string(workers) + " verify --suite " + r.suite + " " + r.args +
                              " --out " + json.string() + csv_arg + " 2>/dev/null"));
      outputs.push_back(slurp(json) + slurp(csv));
    }
    report(8, codes[0] == codes[1] && !outputs[0].empty() && outputs[0] == outputs[1],
           "verify --suite " + r.suite + " " + r.args + ": workers 1 and 3 give byte-identical reports (" +
               std::to_string(outputs[0].size()) + " bytes)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"brickwork acceptance criteria"};
  std::vector<int> selected;
  app.add_option("--criterion", selected, "criteria to run (default: all)")->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);
  if (selected.empty()) selected = {1, 2, 3, 4, 5, 6, 7, 8};
  void (*criteria[])() = {criterion1, criterion2, criterion3, criterion4,
                          criterion5, criterion6, criterion7, criterion8};
  for (int c : selected) {
    try {
      criteria[c - 1]();
    } catch (const std::exception& e) {
      report(c, false, std::string("exception: ") + e.what());
    }
  }
  std::error_code ec;
  fs::remove_all(scratch(), ec);
  return failures == 0 ? 0 : 1;
}
