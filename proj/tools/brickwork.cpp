// Command-line front end. Exit codes: 0 ok, 1 falsified, 2 usage or parse
// error, 3 budget refusal affecting completeness.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "brickwork/budget.hpp"
#include "brickwork/census.hpp"
#include "brickwork/errors.hpp"
#include "brickwork/graph.hpp"
#include "brickwork/io.hpp"
#include "brickwork/named.hpp"

namespace bw = brickwork;

namespace {

constexpr int kOk = 0;
constexpr int kFalsified = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

/// "k4", "c6bar", "r8", "w5", "w7", or "w<k>" / "wheel<k>" for an odd wheel.
bw::MultiGraph graph_by_name(const std::string& name) {
  for (const std::string& known : bw::named_graph_names()) {
    if (name == known) return bw::named_graph(name);
  }
  for (const std::string prefix : {"wheel", "w"}) {
    if (name.rfind(prefix, 0) == 0 && name.size() > prefix.size()) {
      const std::string digits = name.substr(prefix.size());
      if (digits.find_first_not_of("0123456789") == std::string::npos) return bw::odd_wheel(std::stoi(digits));
    }
  }
  throw bw::PreconditionError("unknown graph '" + name + "'");
}

std::vector<bw::MultiGraph> read_graphs(const std::string& path, bw::Format format) {
  if (path == "-") return bw::read_all(std::cin, format);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bw::PreconditionError("cannot open '" + path + "'");
  return bw::read_all(in, format);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw bw::PreconditionError("cannot write '" + path + "'");
  out << text;
}

std::string csv_report(const std::vector<bw::AnalysisReport>& reports, bool timings) {
  std::string text = bw::csv_header(timings) + "\n";
  for (const auto& r : reports) text += bw::csv_row(r, timings) + "\n";
  return text;
}

std::vector<bw::DotHighlight> class_highlights(const bw::AnalysisReport& r) {
  static const char* palette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"};
  std::vector<bw::DotHighlight> out;
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const auto& c = r.classes[i];
    out.push_back({c.edges(), palette[i % 8], (c.is_doubleton() ? "D" : "R") + std::to_string(i)});
  }
  return out;
}

/// "0:1,2:0" -> position pairs.
std::vector<std::pair<int, int>> parse_theta(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw bw::PreconditionError("theta entries look like a:b, got '" + item + "'");
    try {
      out.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
    } catch (const std::exception&) {
      throw bw::PreconditionError("theta entries look like a:b, got '" + item + "'");
    }
  }
  return out;
}

/// "name:vertex".
std::pair<bw::MultiGraph, bw::Vertex> parse_spec(const std::string& spec) {
  const auto colon = spec.rfind(':');
  if (colon == std::string::npos) throw bw::PreconditionError("graph spec looks like name:vertex, got '" + spec + "'");
  bw::MultiGraph g = graph_by_name(spec.substr(0, colon));
  int v = 0;
  try {
    v = std::stoi(spec.substr(colon + 1));
  } catch (const std::exception&) {
    throw bw::PreconditionError("bad vertex in '" + spec + "'");
  }
  if (v < 0 || v >= g.vertex_count()) throw bw::PreconditionError("vertex out of range in '" + spec + "'");
  return {std::move(g), v};
}

int suite_exit(const std::vector<bw::SuiteResult>& suites) {
  bool complete = true;
  for (const auto& s : suites) {
    if (!s.passed()) return kFalsified;
    complete = complete && s.complete();
  }
  return complete ? kOk : kBudget;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"brickwork: matching covered graphs, bricks and wheel-like bricks"};
  app.require_subcommand(1);
  int workers = 1;
  bool timings = false;
  int solid_max_n = 0;
  std::size_t pm_cap = 0;
  app.add_option("--workers", workers, "worker threads (output never depends on it)")->check(CLI::PositiveNumber);
  app.add_flag("--timings", timings, "include per-graph timings in reports");
  app.add_option("--solid-max-n", solid_max_n, "largest order for solidity")->check(CLI::PositiveNumber);
  app.add_option("--pm-cap", pm_cap, "perfect matching enumeration cap")->check(CLI::PositiveNumber);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "analyze graphs");
  std::string a_input;
  std::string a_gen;
  std::string a_format = "graph6";
  std::string a_output = "json";
  bool a_annotate = false;
  auto* a_in_opt = analyze->add_option("input", a_input, "input path, - for stdin");
  auto* a_gen_opt = analyze->add_option("--gen", a_gen, "built-in graph (k4, c6bar, r8, w5, w7, w<k>)");
  a_in_opt->excludes(a_gen_opt);
  analyze->add_option("--format", a_format, "input format")->check(CLI::IsMember({"g6", "graph6", "s6", "sparse6", "edgelist", "el", "edges"}));
  analyze->add_option("--output", a_output, "json, csv or dot")->check(CLI::IsMember({"json", "csv", "dot"}));
  analyze->add_flag("--annotate", a_annotate, "colour removable classes in DOT output");

  // verify
  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string v_suite;
  int v_max_n = 8;
  int v_max_wheel = 7;
  std::string v_from;
  std::string v_format = "graph6";
  std::string v_out;
  std::string v_csv;
  verify->add_option("--suite", v_suite, "main-theorem, wiwj, delta-bound, lemmas or all")
      ->required()
      ->check(CLI::IsMember({"main-theorem", "wiwj", "delta-bound", "lemmas", "all"}));
  verify->add_option("--max-n", v_max_n, "largest order generated (<= 8)")->check(CLI::Range(1, 8));
  verify->add_option("--max-wheel", v_max_wheel, "largest rim length for wiwj")->check(CLI::Range(3, 9));
  verify->add_option("--from", v_from, "read the graph stream from a file (- for stdin) instead of generating");
  verify->add_option("--format", v_format, "stream format")->check(CLI::IsMember({"g6", "graph6", "s6", "sparse6", "edgelist", "el", "edges"}));
  verify->add_option("--out", v_out, "write the JSON summary here instead of stdout");
  verify->add_option("--csv", v_csv, "also write the per-graph CSV report");

  // splice
  auto* splice_cmd = app.add_subcommand("splice", "splice two graphs");
  std::string s_a;
  std::string s_b;
  std::string s_theta;
  std::string s_output = "edgelist";
  splice_cmd->add_option("--a", s_a, "first graph as name:vertex")->required();
  splice_cmd->add_option("--b", s_b, "second graph as name:vertex")->required();
  splice_cmd->add_option("--theta", s_theta, "pairs i:j of star positions (ascending edge ids)");
  splice_cmd->add_option("--output", s_output, "output format")->check(CLI::IsMember({"g6", "graph6", "s6", "sparse6", "edgelist", "el", "edges", "dot"}));

  // gen
  auto* gen = app.add_subcommand("gen", "emit built-in graphs");
  std::vector<std::string> g_args;
  std::string g_output = "edgelist";
  gen->add_option("what", g_args, "NAME | wheel K | census N")->required();
  gen->add_option("--output", g_output, "output format")->check(CLI::IsMember({"g6", "graph6", "s6", "sparse6", "edgelist", "el", "edges", "dot"}));

  // convert
  auto* convert = app.add_subcommand("convert", "convert between formats");
  std::string c_in = "graph6";
  std::string c_out = "edgelist";
  std::string c_input = "-";
  convert->add_option("--in", c_in, "input format")->check(CLI::IsMember({"g6", "graph6", "s6", "sparse6", "edgelist", "el", "edges"}));
  convert->add_option("--out", c_out, "output format")->check(CLI::IsMember({"g6", "graph6", "s6", "sparse6", "edgelist", "el", "edges", "dot"}));
  convert->add_option("input", c_input, "input path, - for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    bw::CensusConfig config;
    config.workers = workers;
    config.timings = timings;
    config.budget = bw::Budget::from_env();
    if (solid_max_n > 0) config.budget.solid_max_n = solid_max_n;
    if (pm_cap > 0) config.budget.pm_cap = pm_cap;

    if (*analyze) {
      std::vector<bw::MultiGraph> graphs;
      if (!a_gen.empty()) {
        graphs.push_back(graph_by_name(a_gen));
      } else {
        if (a_input.empty()) throw bw::PreconditionError("give an input path, - for stdin, or --gen");
        graphs = read_graphs(a_input, bw::parse_format(a_format));
      }
      if (graphs.empty()) throw bw::PreconditionError("no graph in input");
      std::vector<bw::AnalysisReport> reports;
      for (const auto& g : graphs) reports.push_back(bw::analyze(g, config.budget, timings));
      if (a_output == "csv") {
        std::cout << csv_report(reports, timings);
      } else if (a_output == "dot") {
        for (const auto& r : reports) {
          const auto hl = a_annotate ? class_highlights(r) : std::vector<bw::DotHighlight>{};
          std::cout << bw::emit_dot(r.graph, hl);
        }
      } else if (reports.size() == 1) {
        std::cout << bw::to_json(reports.front()).dump(2) << "\n";
      } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(bw::to_json(r));
        std::cout << arr.dump(2) << "\n";
      }
      for (const auto& r : reports) {
        if (!r.notes.empty()) return kBudget;
      }
      return kOk;
    }

    if (*verify) {
      std::vector<bw::SuiteResult> suites;
      std::vector<bw::AnalysisReport> reports;
      const bool needs_corpus = v_suite != "wiwj";
      if (needs_corpus) {
        std::vector<bw::MultiGraph> graphs;
        if (!v_from.empty()) {
          graphs = read_graphs(v_from, bw::parse_format(v_format));
        } else {
          for (int n = 1; n <= v_max_n; ++n) {
            auto level = bw::generate_connected_graphs(n, workers);
            graphs.insert(graphs.end(), level.begin(), level.end());
          }
        }
        reports = bw::analyze_all(graphs, config);
      }
      if (v_suite == "main-theorem" || v_suite == "all") {
        suites.push_back(bw::verify_main_theorem(reports));
        suites.push_back(bw::verify_multigraph_clause(reports, config));
      }
      if (v_suite == "delta-bound" || v_suite == "all") suites.push_back(bw::verify_delta_bound(reports));
      if (v_suite == "lemmas" || v_suite == "all") {
        for (auto& s : bw::lemma_suites(reports, config)) suites.push_back(std::move(s));
      }
      if (v_suite == "wiwj" || v_suite == "all") {
        suites.push_back(bw::wiwj_census({v_max_wheel, 2}, config));
      }
      nlohmann::json summary;
      summary["suite"] = v_suite;
      summary["graphs"] = reports.size();
      nlohmann::json list = nlohmann::json::array();
      for (const auto& s : suites) list.push_back(bw::to_json(s));
      summary["suites"] = list;
      const int code = suite_exit(suites);
      summary["verdict"] = code == kOk ? "pass" : (code == kFalsified ? "falsified" : "incomplete");
      write_text(v_out, summary.dump(2) + "\n");
      if (!v_csv.empty()) write_text(v_csv, csv_report(reports, timings));
      for (const auto& s : suites) {
        std::cerr << (s.passed() ? (s.complete() ? "pass " : "incomplete ") : "FAIL ") << s.name
                  << " (checked " << s.checked << ", counterexamples " << s.counterexamples.size() << ", skipped "
                  << s.skipped << ")\n";
      }
      return code;
    }

    if (*splice_cmd) {
      auto [g, u] = parse_spec(s_a);
      auto [h, v] = parse_spec(s_b);
      if (g.degree(u) != h.degree(v)) {
        throw bw::PreconditionError("splice degree mismatch: d_G(u)=" + std::to_string(g.degree(u)) +
                                    ", d_H(v)=" + std::to_string(h.degree(v)));
      }
      bw::SpliceMap map = bw::identity_splice_map(g, u, h, v);
      if (!s_theta.empty()) {
        map.theta.clear();
        const auto& gs = g.incident(u);
        const auto& hs = h.incident(v);
        for (auto [i, j] : parse_theta(s_theta)) {
          if (i < 0 || j < 0 || i >= static_cast<int>(gs.size()) || j >= static_cast<int>(hs.size())) {
            throw bw::PreconditionError("theta position out of range: " + std::to_string(i) + ":" + std::to_string(j));
          }
          map.theta.emplace_back(gs[i], hs[j]);
        }
      }
      std::cout << bw::emit(bw::splice(g, h, map).graph, bw::parse_format(s_output));
      return kOk;
    }

    if (*gen) {
      const bw::Format out = bw::parse_format(g_output);
      if (g_args.size() == 2 && (g_args[0] == "wheel" || g_args[0] == "census")) {
        int k = 0;
        try {
          k = std::stoi(g_args[1]);
        } catch (const std::exception&) {
          throw bw::PreconditionError("expected a number after '" + g_args[0] + "'");
        }
        if (g_args[0] == "wheel") {
          std::cout << bw::emit(bw::wheel(k), out);
        } else {
          for (const auto& g : bw::generate_connected_graphs(k, workers)) std::cout << bw::emit(g, out);
        }
        return kOk;
      }
      if (g_args.size() != 1) throw bw::PreconditionError("gen takes NAME, wheel K or census N");
      std::cout << bw::emit(graph_by_name(g_args[0]), out);
      return kOk;
    }

    if (*convert) {
      const bw::Format out = bw::parse_format(c_out);
      for (const auto& g : read_graphs(c_input, bw::parse_format(c_in))) std::cout << bw::emit(g, out);
      return kOk;
    }
  } catch (const bw::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const bw::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const bw::UnsupportedFormat& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUsage;
  } catch (const bw::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
