#include "brickwork/census.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "brickwork/canon.hpp"
#include "brickwork/cuts.hpp"
#include "brickwork/errors.hpp"
#include "brickwork/io.hpp"
#include "brickwork/matching.hpp"
#include "brickwork/named.hpp"
#include "brickwork/planarity.hpp"

namespace brickwork {

namespace {

/// Runs f(i) for every i < count, OpenMP-parallel when workers > 1. The
/// first exception (by index) is rethrown after the loop.
template <typename F>
void for_each_index(std::size_t count, int workers, F&& f) {
  std::vector<std::exception_ptr> errors(count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::int64_t i = 0; i < total; ++i) {
    try {
      f(static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string class_text(const RemovableClass& c) {
  return c.f ? std::to_string(c.e) + "-" + std::to_string(*c.f) : std::to_string(c.e);
}

std::string edge_text(const MultiGraph& g, EdgeId id) {
  const Edge& e = g.edge(id);
  return std::to_string(e.u) + "-" + std::to_string(e.v) + "#" + std::to_string(id);
}

std::vector<bool> removable_edge_flags(const MultiGraph& g, const std::vector<RemovableClass>& classes) {
  std::vector<bool> flags(g.next_id(), false);
  for (const RemovableClass& c : classes) {
    if (!c.is_doubleton()) flags[c.e] = true;
  }
  return flags;
}

bool has_two_nonadjacent_removable_edges(const MultiGraph& g, const std::vector<RemovableClass>& classes) {
  std::vector<EdgeId> edges;
  for (const RemovableClass& c : classes) {
    if (!c.is_doubleton()) edges.push_back(c.e);
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& a = g.edge(edges[i]);
      const Edge& b = g.edge(edges[j]);
      if (!a.touches(b.u) && !a.touches(b.v)) return true;
    }
  }
  return false;
}

/// Odd-wheel hub that is also a wheel-like hub and meets every parallel class.
bool hub_holds_parallel_classes(const MultiGraph& g, const std::vector<Vertex>& wheel_like) {
  const auto pcs = parallel_classes(g);
  for (Vertex h : odd_wheel_hubs(underlying_simple(g))) {
    if (std::find(wheel_like.begin(), wheel_like.end(), h) == wheel_like.end()) continue;
    const bool all = std::all_of(pcs.begin(), pcs.end(),
                                 [&](const ParallelClass& pc) { return pc.u == h || pc.v == h; });
    if (all) return true;
  }
  return false;
}

std::string theorem_violation(const MultiGraph& g, const std::vector<Vertex>& wheel_like) {
  if (!is_odd_wheel(underlying_simple(g))) return "wheel-like planar brick is not an odd wheel";
  if (!hub_holds_parallel_classes(g, wheel_like)) return "a parallel class misses every hub";
  return {};
}

}  // namespace

// ---------------------------------------------------------------------------
// Generation

std::vector<MultiGraph> generate_connected_graphs(int n, int workers) {
  if (n < 1) throw PreconditionError("graph order must be positive");
  if (n > 8) {
    throw PreconditionError("built-in generation stops at 8 vertices; stream graph6 from an external "
                            "generator such as `geng -c " + std::to_string(n) + "`");
  }
  std::vector<MultiGraph> level{MultiGraph(1)};
  for (int k = 2; k <= n; ++k) {
    // Every connected graph has a vertex whose removal leaves it connected.
    std::vector<std::vector<std::string>> found(level.size());
    for_each_index(level.size(), workers, [&](std::size_t i) {
      const MultiGraph& base = level[i];
      for (std::uint32_t mask = 1; mask < (1U << (k - 1)); ++mask) {
        MultiGraph g(k);
        for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
        for (Vertex j = 0; j < k - 1; ++j) {
          if ((mask >> j) & 1U) g.add_edge(j, k - 1);
        }
        found[i].push_back(canonical_code(g));
      }
    });
    std::vector<std::string> codes;
    for (auto& f : found) codes.insert(codes.end(), f.begin(), f.end());
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    level.clear();
    for (const std::string& c : codes) level.push_back(parse_graph6(c));
  }
  return level;
}

// ---------------------------------------------------------------------------
// Analysis

int AnalysisReport::removable_edge_count() const {
  return static_cast<int>(std::count_if(classes.begin(), classes.end(),
                                        [](const RemovableClass& c) { return !c.is_doubleton(); }));
}

int AnalysisReport::doubleton_count() const {
  return static_cast<int>(classes.size()) - removable_edge_count();
}

AnalysisReport analyze(const MultiGraph& g, const Budget& budget, bool timings) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport r;
  r.graph = g;
  r.canonical = canonical_code(g);
  r.n = g.vertex_count();
  r.m = g.edge_count();
  r.max_degree = g.max_degree();
  r.bipartite = is_bipartite(g);
  r.planar = is_planar(g);
  try {
    r.matching_covered = is_matching_covered(g);
    if (r.matching_covered) {
      r.b = brick_count(g);
      r.brick = is_brick(g);
      r.brace = is_brace(g);
      r.classes = removable_classes(g);
      r.hubs = hubs_of(g, r.classes);
      r.near_bipartite = is_near_bipartite(g).has_value();
      r.wheel_like = r.brick && !r.hubs.empty();
    }
  } catch (const BudgetExceeded& e) {
    r.notes.push_back(std::string("matching structure: not computed (") + e.what() + ")");
  }
  if (r.brick) {
    try {
      r.solid = is_solid(g, budget);
    } catch (const BudgetExceeded& e) {
      r.notes.push_back(std::string("solid: not computed (") + e.what() + ")");
    }
    try {
      r.robust_cut = find_robust_cut(g, budget).has_value();
    } catch (const BudgetExceeded& e) {
      r.notes.push_back(std::string("robust cut: not computed (") + e.what() + ")");
    }
  }
  if (timings) {
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

namespace {

std::vector<AnalysisReport> analyze_all_impl(std::span<const MultiGraph> graphs, const CensusConfig& config,
                                             int workers) {
  std::vector<std::string> codes(graphs.size());
  for_each_index(graphs.size(), workers, [&](std::size_t i) { codes[i] = canonical_code(graphs[i]); });
  std::vector<std::size_t> order(graphs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return codes[a] < codes[b]; });
  std::vector<std::size_t> keep;
  for (std::size_t i : order) {
    if (keep.empty() || codes[keep.back()] != codes[i]) keep.push_back(i);
  }
  std::vector<AnalysisReport> out(keep.size());
  for_each_index(keep.size(), workers,
                 [&](std::size_t i) { out[i] = analyze(graphs[keep[i]], config.budget, config.timings); });
  return out;
}

}  // namespace

std::vector<AnalysisReport> analyze_all(std::span<const MultiGraph> graphs, const CensusConfig& config) {
  return analyze_all_impl(graphs, config, config.workers);
}

namespace reference {

std::vector<AnalysisReport> analyze_all(std::span<const MultiGraph> graphs, const CensusConfig& config) {
  return analyze_all_impl(graphs, config, 1);
}

}  // namespace reference

std::string csv_header(bool timings) {
  std::string h =
      "canonical,n,m,max_degree,matching_covered,bipartite,brick,brace,planar,solid,robust_cut,"
      "near_bipartite,wheel_like,b,hubs,removable_edges,removable_doubletons,classes,notes";
  if (timings) h += ",millis";
  return h;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string flag(bool b) { return b ? "1" : "0"; }
std::string flag(const std::optional<bool>& b) { return b ? flag(*b) : ""; }

}  // namespace

std::string csv_row(const AnalysisReport& r, bool timings) {
  std::vector<std::string> hubs;
  for (Vertex h : r.hubs) hubs.push_back(std::to_string(h));
  std::vector<std::string> classes;
  for (const RemovableClass& c : r.classes) classes.push_back(class_text(c));
  std::vector<std::string> f{csv_field(r.canonical),
                             std::to_string(r.n),
                             std::to_string(r.m),
                             std::to_string(r.max_degree),
                             flag(r.matching_covered),
                             flag(r.bipartite),
                             flag(r.brick),
                             flag(r.brace),
                             flag(r.planar),
                             flag(r.solid),
                             flag(r.robust_cut),
                             flag(r.near_bipartite),
                             flag(r.wheel_like),
                             r.b ? std::to_string(*r.b) : "",
                             join(hubs, " "),
                             r.matching_covered ? std::to_string(r.removable_edge_count()) : "",
                             r.matching_covered ? std::to_string(r.doubleton_count()) : "",
                             join(classes, " "),
                             csv_field(join(r.notes, "; "))};
  if (timings) {
    std::ostringstream ms;
    ms.precision(3);
    ms << std::fixed << r.millis.value_or(0.0);
    f.push_back(ms.str());
  }
  return join(f, ",");
}

nlohmann::json to_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["canonical"] = r.canonical;
  j["n"] = r.n;
  j["m"] = r.m;
  j["max_degree"] = r.max_degree;
  j["matching_covered"] = r.matching_covered;
  j["bipartite"] = r.bipartite;
  j["brick"] = r.brick;
  j["brace"] = r.brace;
  j["planar"] = r.planar;
  j["solid"] = r.solid ? nlohmann::json(*r.solid) : nlohmann::json(nullptr);
  j["robust_cut"] = r.robust_cut ? nlohmann::json(*r.robust_cut) : nlohmann::json(nullptr);
  j["near_bipartite"] = r.near_bipartite;
  j["wheel_like"] = r.wheel_like;
  j["b"] = r.b ? nlohmann::json(*r.b) : nlohmann::json(nullptr);
  j["hubs"] = r.hubs;
  nlohmann::json classes = nlohmann::json::array();
  for (const RemovableClass& c : r.classes) {
    nlohmann::json cj;
    cj["edges"] = c.edges();
    nlohmann::json ends = nlohmann::json::array();
    for (EdgeId id : c.edges()) ends.push_back({r.graph.edge(id).u, r.graph.edge(id).v});
    cj["ends"] = ends;
    classes.push_back(cj);
  }
  j["removable_classes"] = classes;
  j["removable_edges"] = r.removable_edge_count();
  j["removable_doubletons"] = r.doubleton_count();
  j["notes"] = r.notes;
  if (r.millis) j["millis"] = *r.millis;
  return j;
}

nlohmann::json to_json(const SuiteResult& s) {
  nlohmann::json j;
  j["name"] = s.name;
  j["passed"] = s.passed();
  j["complete"] = s.complete();
  j["checked"] = s.checked;
  j["skipped"] = s.skipped;
  j["skip_reasons"] = s.skip_reasons;
  nlohmann::json ce = nlohmann::json::array();
  for (const Counterexample& c : s.counterexamples) ce.push_back({{"graph", c.graph}, {"detail", c.detail}});
  j["counterexamples"] = ce;
  j["data"] = s.data;
  return j;
}

// ---------------------------------------------------------------------------
// Main theorem, multigraph clause, Δ-bound

SuiteResult verify_main_theorem(std::span<const AnalysisReport> reports) {
  SuiteResult s;
  s.name = "main-theorem";
  std::vector<std::string> wheel_like;
  std::map<int, int> planar_bricks;
  for (const AnalysisReport& r : reports) {
    if (!r.notes.empty() && !r.matching_covered) {
      ++s.skipped;
      s.skip_reasons.push_back(r.canonical + ": " + join(r.notes, "; "));
      continue;
    }
    if (!r.brick || !r.planar) continue;
    ++s.checked;
    ++planar_bricks[r.n];
    if (!r.wheel_like) continue;
    wheel_like.push_back(r.canonical);
    const std::string bad = theorem_violation(r.graph, r.hubs);
    if (!bad.empty()) s.counterexamples.push_back({r.canonical, bad});
  }
  s.data["wheel_like"] = wheel_like;
  nlohmann::json per_n = nlohmann::json::object();
  for (auto [n, c] : planar_bricks) per_n[std::to_string(n)] = c;
  s.data["planar_bricks_by_order"] = per_n;
  return s;
}

SuiteResult verify_multigraph_clause(std::span<const AnalysisReport> reports, const CensusConfig& config) {
  SuiteResult s;
  s.name = "multigraph-clause";
  struct Variant {
    MultiGraph graph;
    std::string source;
    bool hub_doubling = false;
  };
  std::map<std::string, Variant> variants;
  for (const AnalysisReport& r : reports) {
    if (!r.brick || !r.planar || !r.wheel_like) continue;
    const MultiGraph& g = r.graph;
    for (Vertex h : r.hubs) {
      const auto& star = g.incident(h);
      for (std::uint32_t mask = 1; mask < (1U << star.size()); ++mask) {
        MultiGraph v = g;
        for (std::size_t i = 0; i < star.size(); ++i) {
          if ((mask >> i) & 1U) v = add_parallel(v, star[i]);
        }
        auto& slot = variants[canonical_code(v)];
        if (slot.source.empty()) slot = {v, r.canonical, true};
        slot.hub_doubling = true;
      }
    }
    for (const Edge& e : g.edges()) {
      MultiGraph v = add_parallel(g, e.id);
      auto& slot = variants[canonical_code(v)];
      if (slot.source.empty()) slot = {v, r.canonical, false};
    }
  }
  std::vector<std::pair<std::string, Variant>> list(variants.begin(), variants.end());
  struct Outcome {
    bool brick = false;
    bool planar = false;
    bool wheel_like = false;
    std::string bad;
  };
  std::vector<Outcome> out(list.size());
  for_each_index(list.size(), config.workers, [&](std::size_t i) {
    const MultiGraph& g = list[i].second.graph;
    Outcome& o = out[i];
    o.brick = is_brick(g);
    o.planar = is_planar(g);
    if (!o.brick) return;
    const auto hubs = wheel_like_hubs(g);
    o.wheel_like = !hubs.empty();
    if (list[i].second.hub_doubling && !o.wheel_like) {
      o.bad = "hub-spoke doubling is not wheel-like";
    } else if (o.wheel_like && o.planar) {
      o.bad = theorem_violation(g, hubs);
    }
  });
  std::size_t hub_variants = 0;
  std::size_t wheel_like = 0;
  std::size_t rim_wheel_like = 0;
  for (std::size_t i = 0; i < list.size(); ++i) {
    ++s.checked;
    if (list[i].second.hub_doubling) ++hub_variants;
    if (out[i].wheel_like) ++wheel_like;
    if (!list[i].second.hub_doubling && out[i].wheel_like) ++rim_wheel_like;
    if (!out[i].brick) {
      s.counterexamples.push_back({list[i].first, "doubling an edge of a brick gave a non-brick"});
    } else if (!out[i].bad.empty()) {
      s.counterexamples.push_back({list[i].first, out[i].bad + " (from " + list[i].second.source + ")"});
    }
  }
  s.data["variants"] = list.size();
  s.data["hub_doubling_variants"] = hub_variants;
  s.data["single_doubling_variants"] = list.size() - hub_variants;
  s.data["wheel_like_variants"] = wheel_like;
  s.data["wheel_like_single_doublings"] = rim_wheel_like;
  return s;
}

SuiteResult verify_delta_bound(std::span<const AnalysisReport> reports) {
  SuiteResult s;
  s.name = "delta-bound";
  std::map<int, int> min_edges;
  std::map<int, int> bricks;
  for (const AnalysisReport& r : reports) {
    if (!r.notes.empty() && !r.matching_covered) {
      ++s.skipped;
      s.skip_reasons.push_back(r.canonical + ": " + join(r.notes, "; "));
      continue;
    }
    if (!r.brick) continue;
    ++s.checked;
    ++bricks[r.n];
    const int classes = static_cast<int>(r.classes.size());
    if (classes < r.max_degree) {
      s.counterexamples.push_back({r.canonical, std::to_string(classes) + " removable classes but maximum degree " +
                                                    std::to_string(r.max_degree)});
    }
    auto it = min_edges.find(r.n);
    if (it == min_edges.end() || r.removable_edge_count() < it->second) {
      min_edges[r.n] = r.removable_edge_count();
    }
  }
  nlohmann::json mins = nlohmann::json::object();
  for (auto [n, m] : min_edges) mins[std::to_string(n)] = m;
  nlohmann::json counts = nlohmann::json::object();
  for (auto [n, c] : bricks) counts[std::to_string(n)] = c;
  s.data["min_removable_edges_by_order"] = mins;
  s.data["bricks_by_order"] = counts;
  return s;
}

// ---------------------------------------------------------------------------
// Splicings of odd wheels

MultiGraph WheelOperand::graph() const { return odd_wheel(k, spokes); }

Vertex WheelOperand::vertex() const { return at == Attachment::hub ? k : 0; }

namespace {

/// The attachment's distinct neighbours with their multiplicities, and the
/// rim symmetries of the operand fixing it, as permutations of that list.
struct Side {
  std::vector<Vertex> nbr;
  std::vector<int> cap;
  std::vector<std::vector<int>> perms;
};

Side side_of(const WheelOperand& w) {
  Side s;
  const int k = w.k;
  if (w.at == Attachment::hub) {
    for (int i = 0; i < k; ++i) {
      s.nbr.push_back(i);
      s.cap.push_back(w.spokes[i]);
    }
    for (int a = 0; a < k; ++a) {
      for (bool refl : {false, true}) {
        std::vector<int> p(k);
        bool ok = true;
        for (int i = 0; i < k; ++i) {
          p[i] = refl ? ((a - i) % k + k) % k : (a + i) % k;
          if (w.spokes[p[i]] != w.spokes[i]) ok = false;
        }
        if (ok) s.perms.push_back(p);
      }
    }
  } else {
    s.nbr = {1, k - 1, k};
    s.cap = {1, 1, w.spokes[0]};
    s.perms.push_back({0, 1, 2});
    bool mirror = true;
    for (int i = 0; i < k; ++i) {
      if (w.spokes[i] != w.spokes[(k - i) % k]) mirror = false;
    }
    if (mirror) s.perms.push_back({1, 0, 2});
  }
  return s;
}

/// Tables T[i][j] (edges joining G-neighbour i to H-neighbour j) with the
/// required margins, one per orbit of the two symmetry groups.
void for_each_table(const Side& g, const Side& h, const std::function<void(const std::vector<int>&)>& visit) {
  const int rows = static_cast<int>(g.nbr.size());
  const int cols = static_cast<int>(h.nbr.size());
  std::vector<int> t(static_cast<std::size_t>(rows) * cols, 0);
  std::vector<int> row_left = g.cap;
  std::vector<int> col_left = h.cap;
  auto is_rep = [&] {
    for (const auto& p : g.perms) {
      for (const auto& q : h.perms) {
        for (int i = 0; i < rows; ++i) {
          for (int j = 0; j < cols; ++j) {
            const int a = t[p[i] * cols + q[j]];
            const int b = t[i * cols + j];
            if (a != b) {
              if (a < b) return false;
              goto next;
            }
          }
        }
      next:;
      }
    }
    return true;
  };
  auto fill = [&](auto&& self, int cell) -> void {
    if (cell == rows * cols) {
      if (is_rep()) visit(t);
      return;
    }
    const int i = cell / cols;
    const int j = cell % cols;
    if (j == cols - 1) {
      const int x = row_left[i];
      if (x > col_left[j]) return;
      t[cell] = x;
      row_left[i] -= x;
      col_left[j] -= x;
      self(self, cell + 1);
      row_left[i] += x;
      col_left[j] += x;
      t[cell] = 0;
      return;
    }
    for (int x = std::min(row_left[i], col_left[j]); x >= 0; --x) {
      t[cell] = x;
      row_left[i] -= x;
      col_left[j] -= x;
      self(self, cell + 1);
      row_left[i] += x;
      col_left[j] += x;
    }
    t[cell] = 0;
  };
  fill(fill, 0);
}

void for_each_vector(int len, int max_value, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> v(len, 1);
  while (true) {
    visit(v);
    int i = len - 1;
    while (i >= 0 && v[i] == max_value) v[i--] = 1;
    if (i < 0) return;
    ++v[i];
  }
}

bool dihedral_minimal(const std::vector<int>& m) {
  const int k = static_cast<int>(m.size());
  for (int a = 0; a < k; ++a) {
    for (bool refl : {false, true}) {
      for (int i = 0; i < k; ++i) {
        const int x = m[refl ? ((a - i) % k + k) % k : (a + i) % k];
        if (x != m[i]) {
          if (x < m[i]) return false;
          break;
        }
      }
    }
  }
  return true;
}

bool mirror_minimal(const std::vector<int>& m) {
  const int k = static_cast<int>(m.size());
  for (int i = 0; i < k; ++i) {
    const int x = m[(k - i) % k];
    if (x != m[i]) return x > m[i];
  }
  return true;
}

void add_instances(const WheelOperand& g, const WheelOperand& h, std::vector<WiWjInstance>& out) {
  const Side gs = side_of(g);
  const Side hs = side_of(h);
  const int cols = static_cast<int>(hs.nbr.size());
  for_each_table(gs, hs, [&](const std::vector<int>& t) {
    WiWjInstance inst{g, h, {}};
    for (std::size_t i = 0; i < gs.nbr.size(); ++i) {
      for (int j = 0; j < cols; ++j) {
        for (int c = 0; c < t[i * cols + j]; ++c) inst.joins.emplace_back(gs.nbr[i], hs.nbr[j]);
      }
    }
    out.push_back(std::move(inst));
  });
}

const WheelOperand* hub_side(const WiWjInstance& inst) {
  const bool gh = inst.g.at == Attachment::hub;
  const bool hh = inst.h.at == Attachment::hub;
  if (gh == hh) return nullptr;
  return gh ? &inst.g : &inst.h;
}

/// (u_1, u_r) on the hub side's rim for a hub-rim instance.
std::pair<Vertex, Vertex> attachment_pair(const WiWjInstance& inst) {
  const bool g_hub = inst.g.at == Attachment::hub;
  const WheelOperand& rim = g_hub ? inst.h : inst.g;
  Vertex u1 = -1;
  Vertex ur = -1;
  for (auto [x, y] : inst.joins) {
    const Vertex hub_end = g_hub ? x : y;
    const Vertex rim_end = g_hub ? y : x;
    if (rim_end == 1) u1 = hub_end;
    if (rim_end == rim.k - 1) ur = hub_end;
  }
  return {u1, ur};
}

}  // namespace

std::optional<int> WiWjInstance::r() const {
  const WheelOperand* a = hub_side(*this);
  if (!a) return std::nullopt;
  auto [u1, ur] = attachment_pair(*this);
  return 1 + ((ur - u1) % a->k + a->k) % a->k;
}

SpliceResult wiwj_splice(const WiWjInstance& inst) {
  const MultiGraph g = inst.g.graph();
  const MultiGraph h = inst.h.graph();
  const Vertex u = inst.g.vertex();
  const Vertex v = inst.h.vertex();
  std::map<Vertex, std::vector<EdgeId>> g_star;
  std::map<Vertex, std::vector<EdgeId>> h_star;
  for (EdgeId id : g.incident(u)) g_star[g.edge(id).other(u)].push_back(id);
  for (EdgeId id : h.incident(v)) h_star[h.edge(id).other(v)].push_back(id);
  SpliceMap map;
  map.u = u;
  map.v = v;
  for (auto [x, y] : inst.joins) {
    auto& gs = g_star[x];
    auto& hs = h_star[y];
    if (gs.empty() || hs.empty()) throw PreconditionError("join does not match the attachment stars");
    map.theta.emplace_back(gs.back(), hs.back());
    gs.pop_back();
    hs.pop_back();
  }
  return splice(g, h, map);
}

bool wiwj_closed_form(const WiWjInstance& inst) {
  // 1) exactly one hub is consumed, and its wheel has at least six vertices.
  const WheelOperand* a = hub_side(inst);
  if (!a || a->k + 1 < 6) return false;
  // 2) parallel edges only at the hubs.
  for (const WheelOperand* w : {&inst.g, &inst.h}) {
    for (const ParallelClass& pc : parallel_classes(w->graph())) {
      if (pc.u != w->k && pc.v != w->k) return false;
    }
  }
  // 3) u_1 != u_r and u_1 u_r is not a rim edge.
  const int r = *inst.r();
  return r != 1 && r != 2 && r != a->k;
}

std::optional<bool> wiwj_predicate(const WiWjInstance& inst) {
  if (!is_brick(wiwj_splice(inst).graph)) return std::nullopt;
  return wiwj_closed_form(inst);
}

std::vector<WiWjInstance> wiwj_instances(const WiWjBounds& bounds) {
  if (bounds.max_wheel < 3 || bounds.max_multiplicity < 1) throw PreconditionError("empty wheel bounds");
  std::vector<int> odd;
  for (int k = 3; k <= bounds.max_wheel; k += 2) odd.push_back(k);
  const int mm = bounds.max_multiplicity;
  std::vector<WiWjInstance> out;
  // Hub of G to a rim vertex of H; the rim vertex's spoke takes d(u) - 2.
  for (int s : odd) {
    for_each_vector(s, mm, [&](const std::vector<int>& mg) {
      if (!dihedral_minimal(mg)) return;
      const int d = std::accumulate(mg.begin(), mg.end(), 0);
      for (int t : odd) {
        for_each_vector(t - 1, mm, [&](const std::vector<int>& rest) {
          std::vector<int> mh{d - 2};
          mh.insert(mh.end(), rest.begin(), rest.end());
          if (!mirror_minimal(mh)) return;
          add_instances({s, mg, Attachment::hub}, {t, mh, Attachment::rim}, out);
        });
      }
    });
  }
  // Hub to hub.
  for (int s : odd) {
    for (int t : odd) {
      if (t < s) continue;
      for_each_vector(s, mm, [&](const std::vector<int>& mg) {
        if (!dihedral_minimal(mg)) return;
        const int d = std::accumulate(mg.begin(), mg.end(), 0);
        for_each_vector(t, mm, [&](const std::vector<int>& mh) {
          if (!dihedral_minimal(mh) || std::accumulate(mh.begin(), mh.end(), 0) != d) return;
          add_instances({s, mg, Attachment::hub}, {t, mh, Attachment::hub}, out);
        });
      });
    }
  }
  // Rim to rim.
  for (int s : odd) {
    for (int t : odd) {
      if (t < s) continue;
      for (int m0 = 1; m0 <= mm; ++m0) {
        for_each_vector(s - 1, mm, [&](const std::vector<int>& rg) {
          std::vector<int> mg{m0};
          mg.insert(mg.end(), rg.begin(), rg.end());
          if (!mirror_minimal(mg)) return;
          for_each_vector(t - 1, mm, [&](const std::vector<int>& rh) {
            std::vector<int> mh{m0};
            mh.insert(mh.end(), rh.begin(), rh.end());
            if (!mirror_minimal(mh)) return;
            add_instances({s, mg, Attachment::rim}, {t, mh, Attachment::rim}, out);
          });
        });
      }
    }
  }
  return out;
}

namespace {

std::string describe(const WiWjInstance& inst) {
  auto operand = [](const WheelOperand& w) {
    std::string s = "W" + std::to_string(w.k) + (w.at == Attachment::hub ? "@hub" : "@rim") + "[";
    for (std::size_t i = 0; i < w.spokes.size(); ++i) s += (i ? "," : "") + std::to_string(w.spokes[i]);
    return s + "]";
  };
  std::string s = operand(inst.g) + " x " + operand(inst.h) + " joins";
  for (auto [x, y] : inst.joins) s += " " + std::to_string(x) + ":" + std::to_string(y);
  if (auto r = inst.r()) s += " r=" + std::to_string(*r);
  return s;
}

std::string kind_of(const WiWjInstance& inst) {
  const bool gh = inst.g.at == Attachment::hub;
  const bool hh = inst.h.at == Attachment::hub;
  return gh && hh ? "hub-hub" : (!gh && !hh ? "rim-rim" : "hub-rim");
}

}  // namespace

SuiteResult wiwj_census(const WiWjBounds& bounds, const CensusConfig& config) {
  SuiteResult s;
  s.name = "wiwj";
  const std::vector<WiWjInstance> instances = wiwj_instances(bounds);
  struct Light {
    std::string code;
    bool closed = false;
    std::vector<Vertex> hint;
  };
  std::vector<Light> light(instances.size());
  for_each_index(instances.size(), config.workers, [&](std::size_t i) {
    const SpliceResult sp = wiwj_splice(instances[i]);
    light[i].code = canonical_code(sp.graph);
    light[i].closed = wiwj_closed_form(instances[i]);
    if (hub_side(instances[i])) {
      auto [u1, ur] = attachment_pair(instances[i]);
      const bool g_hub = instances[i].g.at == Attachment::hub;
      const auto& hub_map = g_hub ? sp.g_vertex : sp.h_vertex;
      const auto& rim_map = g_hub ? sp.h_vertex : sp.g_vertex;
      const Vertex vh = g_hub ? instances[i].h.k : instances[i].g.k;
      light[i].hint = {hub_map[u1], hub_map[ur], rim_map[vh]};
    }
  });
  // Brute force once per isomorphism class of spliced graph.
  std::map<std::string, std::size_t> first;
  for (std::size_t i = 0; i < instances.size(); ++i) first.emplace(light[i].code, i);
  std::vector<std::size_t> reps;
  for (auto& [code, i] : first) reps.push_back(i);
  struct Brute {
    bool brick = false;
    bool wheel_like = false;
    bool planar = false;
    std::string witness;  // empty, "ok", or a problem
  };
  std::vector<Brute> brute(reps.size());
  for_each_index(reps.size(), config.workers, [&](std::size_t k) {
    const std::size_t i = reps[k];
    const MultiGraph g = wiwj_splice(instances[i]).graph;
    Brute& b = brute[k];
    b.brick = is_brick(g);
    if (!b.brick) return;
    b.wheel_like = is_wheel_like(g);
    if (!b.wheel_like) return;
    b.planar = is_planar(g);
    WitnessSearch search;
    search.max_steps = config.budget.witness_steps;
    search.k33_class_hint = light[i].hint;
    try {
      auto w = light[i].hint.empty() ? kuratowski_witness(g, WitnessSearch{config.budget.witness_steps, {}})
                                     : kuratowski_witness(g, search);
      b.witness = !w ? "no subdivision found" : validate_witness(g, *w);
      if (b.witness.empty()) b.witness = "ok";
    } catch (const BudgetExceeded& e) {
      b.witness = std::string("not computed (") + e.what() + ")";
    }
  });
  std::map<std::string, std::size_t> brute_of;
  for (std::size_t k = 0; k < reps.size(); ++k) brute_of[light[reps[k]].code] = k;

  std::map<std::string, std::map<std::string, std::size_t>> tally;
  std::size_t witnesses = 0;
  std::set<std::string> reported;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Brute& b = brute[brute_of[light[i].code]];
    auto& t = tally[kind_of(instances[i])];
    ++t["instances"];
    if (!b.brick) {
      ++t["not_brick"];
      continue;
    }
    ++s.checked;
    ++t["bricks"];
    if (light[i].closed) ++t["predicate_true"];
    if (b.wheel_like) ++t["wheel_like"];
    if (light[i].closed != b.wheel_like) {
      s.counterexamples.push_back({light[i].code, "predicate " + std::string(light[i].closed ? "true" : "false") +
                                                      " but is_wheel_like " + (b.wheel_like ? "true" : "false") +
                                                      ": " + describe(instances[i])});
    }
    if (b.wheel_like && reported.insert(light[i].code).second) {
      if (b.planar) s.counterexamples.push_back({light[i].code, "wheel-like splice is planar: " + describe(instances[i])});
      if (b.witness == "ok") {
        ++witnesses;
      } else {
        s.counterexamples.push_back({light[i].code, "K3,3/K5 witness: " + b.witness});
      }
    }
  }
  nlohmann::json tj = nlohmann::json::object();
  for (auto& [kind, m] : tally) {
    for (auto& [k, v] : m) tj[kind][k] = v;
  }
  s.data["by_kind"] = tj;
  s.data["instances"] = instances.size();
  s.data["distinct_graphs"] = reps.size();
  s.data["wheel_like_graphs"] = reported.size();
  s.data["validated_witnesses"] = witnesses;
  s.data["max_wheel"] = bounds.max_wheel;
  s.data["max_multiplicity"] = bounds.max_multiplicity;
  return s;
}

// ---------------------------------------------------------------------------
// Constructed splices

namespace {

std::vector<Vertex> vertex_orbit_representatives(const MultiGraph& g) {
  std::vector<Vertex> reps;
  std::set<std::string> seen;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    std::vector<int> colours(g.vertex_count(), 0);
    colours[u] = 1;
    if (seen.insert(canonical_labeling(g, colours).certificate).second) reps.push_back(u);
  }
  return reps;
}

}  // namespace

std::vector<SpliceInstance> constructed_splices(std::span<const AnalysisReport> corpus, int max_n, int workers) {
  std::vector<const AnalysisReport*> bricks;
  for (const AnalysisReport& r : corpus) {
    if (r.brick && r.n <= max_n) bricks.push_back(&r);
  }
  struct Plan {
    std::size_t a;
    Vertex u;
    std::size_t b;
    Vertex v;
  };
  std::vector<std::vector<Vertex>> orbit_reps(bricks.size());
  for (std::size_t i = 0; i < bricks.size(); ++i) orbit_reps[i] = vertex_orbit_representatives(bricks[i]->graph);
  std::vector<Plan> plans;
  for (std::size_t a = 0; a < bricks.size(); ++a) {
    for (std::size_t b = a; b < bricks.size(); ++b) {
      for (Vertex u : orbit_reps[a]) {
        for (Vertex v : orbit_reps[b]) {
          if (bricks[a]->graph.degree(u) == bricks[b]->graph.degree(v)) plans.push_back({a, u, b, v});
        }
      }
    }
  }
  std::vector<std::vector<std::pair<std::string, SpliceInstance>>> built(plans.size());
  for_each_index(plans.size(), workers, [&](std::size_t i) {
    const Plan& p = plans[i];
    const MultiGraph& g = bricks[p.a]->graph;
    const MultiGraph& h = bricks[p.b]->graph;
    std::vector<EdgeId> hs = h.incident(p.v);
    std::sort(hs.begin(), hs.end());
    std::set<std::string> local;
    do {
      SpliceMap map;
      map.u = p.u;
      map.v = p.v;
      for (std::size_t j = 0; j < hs.size(); ++j) map.theta.emplace_back(g.incident(p.u)[j], hs[j]);
      SpliceResult res = splice(g, h, map);
      std::vector<int> colours(res.graph.vertex_count(), 0);
      for (Vertex x = 0; x < res.graph.vertex_count(); ++x) colours[x] = res.g_side.contains(x) ? 0 : 1;
      std::string key = std::to_string(p.a) + "/" + std::to_string(p.b) + "/" +
                        canonical_labeling(res.graph, colours).certificate;
      if (local.insert(key).second) built[i].emplace_back(std::move(key), SpliceInstance{g, p.u, h, p.v, std::move(res)});
    } while (std::next_permutation(hs.begin(), hs.end()));
  });
  std::vector<SpliceInstance> out;
  std::set<std::string> seen;
  for (auto& list : built) {
    for (auto& [key, inst] : list) {
      if (seen.insert(key).second) out.push_back(std::move(inst));
    }
  }
  // Hub-rim wheel splicings: the source of wheel-like splices.
  for (const WiWjInstance& w : wiwj_instances({5, 2})) {
    if (!hub_side(w) || w.g.at != Attachment::hub) continue;
    out.push_back({w.g.graph(), w.g.vertex(), w.h.graph(), w.h.vertex(), wiwj_splice(w)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lemma suites

namespace {

struct Tally {
  std::size_t checked = 0;
  std::vector<Counterexample> bad;
};

/// Runs `check` on every item in parallel and merges in item order.
template <typename T, typename F>
SuiteResult run_suite(std::string name, const std::vector<T>& items, int workers, F check) {
  std::vector<Tally> tallies(items.size());
  for_each_index(items.size(), workers, [&](std::size_t i) { check(items[i], tallies[i]); });
  SuiteResult s;
  s.name = std::move(name);
  for (Tally& t : tallies) {
    s.checked += t.checked;
    for (auto& c : t.bad) s.counterexamples.push_back(std::move(c));
  }
  return s;
}

bool contains_class(const std::vector<RemovableClass>& classes, const RemovableClass& c) {
  return std::find(classes.begin(), classes.end(), c) != classes.end();
}

std::vector<RemovableClass> doubletons_with(const std::vector<RemovableClass>& classes, EdgeId e) {
  std::vector<RemovableClass> out;
  for (const RemovableClass& c : classes) {
    if (c.is_doubleton() && (c.e == e || *c.f == e)) out.push_back(c);
  }
  return out;
}

EdgeId partner(const RemovableClass& c, EdgeId e) { return c.e == e ? *c.f : c.e; }

/// Removable in a contraction, where edges absent from it count as removable.
bool removable_in(const MultiGraph& k, const std::vector<bool>& flags, EdgeId e) {
  return !k.has_edge(e) || (e < static_cast<EdgeId>(flags.size()) && flags[e]);
}

void check_splice(const SpliceInstance& inst, std::array<Tally, 4>& t) {
  const MultiGraph& w = inst.result.graph;
  const std::string code = canonical_code(w);
  const VertexSet x = inst.result.g_side;
  const std::vector<EdgeId>& cut = inst.result.cut;
  auto in_cut = [&](EdgeId e) { return std::find(cut.begin(), cut.end(), e) != cut.end(); };
  if (!is_matching_covered(w)) {
    t[0].bad.push_back({code, "splice of bricks is not matching covered"});
    return;
  }
  const auto classes_w = removable_classes(w);
  const auto flags_w = removable_edge_flags(w, classes_w);
  // Contractions: kg keeps the G side (≅ G), kh keeps the H side (≅ H).
  const MultiGraph kg = contract(w, x.complement()).graph;
  const MultiGraph kh = contract(w, x).graph;
  if (!is_matching_covered(kg) || !is_matching_covered(kh)) {
    t[0].bad.push_back({code, "splice cut is not separating"});
    return;
  }
  const auto classes_g = removable_classes(kg);
  const auto classes_h = removable_classes(kh);
  const auto flags_g = removable_edge_flags(kg, classes_g);
  const auto flags_h = removable_edge_flags(kh, classes_h);

  // Removable in both contractions => removable.
  ++t[0].checked;
  for (const Edge& e : w.edges()) {
    if (removable_in(kg, flags_g, e.id) && removable_in(kh, flags_h, e.id) && !flags_w[e.id]) {
      t[0].bad.push_back({code, "edge " + edge_text(w, e.id) + " removable in both contractions only"});
    }
  }

  // Doubleton of a brick contraction along a non-tight cut.
  const bool tight = classify_cut(w, x).tight;
  if (!tight) {
    const std::pair<const MultiGraph*, const std::vector<RemovableClass>*> sides[] = {{&kg, &classes_g},
                                                                                     {&kh, &classes_h}};
    const std::vector<bool>* other_flags[] = {&flags_h, &flags_g};
    const MultiGraph* others[] = {&kh, &kg};
    for (int side = 0; side < 2; ++side) {
      if (!is_brick(*sides[side].first)) continue;
      for (const RemovableClass& r : *sides[side].second) {
        if (!r.is_doubleton()) continue;
        std::vector<EdgeId> crossing;
        std::vector<EdgeId> rest;
        for (EdgeId e : r.edges()) (in_cut(e) ? crossing : rest).push_back(e);
        const bool hyp = crossing.empty() ||
                         (crossing.size() == 1 && removable_in(*others[side], *other_flags[side], crossing[0]));
        if (!hyp) continue;
        ++t[1].checked;
        const bool found = std::any_of(rest.begin(), rest.end(), [&](EdgeId e) { return flags_w[e]; });
        if (!found) t[1].bad.push_back({code, "doubleton " + class_text(r) + " has no edge removable in G"});
      }
    }
  }

  // Doubletons sharing a cut edge combine.
  const bool w_brick = is_brick(w);
  if (w_brick && is_brick(kg) && is_brick(kh)) {
    for (EdgeId e : cut) {
      for (const RemovableClass& dg : doubletons_with(classes_g, e)) {
        for (const RemovableClass& dh : doubletons_with(classes_h, e)) {
          ++t[2].checked;
          const EdgeId f = partner(dg, e);
          const EdgeId g = partner(dh, e);
          if (f == g || !contains_class(classes_w, RemovableClass::doubleton(f, g))) {
            t[2].bad.push_back({code, "doubletons " + class_text(dg) + " and " + class_text(dh) +
                                          " do not give a doubleton"});
          }
        }
      }
    }
  }

  // A wheel-like splice of two bricks.
  if (w_brick && !hubs_of(w, classes_w).empty() && is_brick(inst.g) && is_brick(inst.h)) {
    ++t[3].checked;
    const auto cg = removable_classes(inst.g);
    const auto ch = removable_classes(inst.h);
    const auto hubs_g = hubs_of(inst.g, cg);
    const auto hubs_h = hubs_of(inst.h, ch);
    const bool g_hub = std::find(hubs_g.begin(), hubs_g.end(), inst.u) != hubs_g.end();
    const bool h_hub = std::find(hubs_h.begin(), hubs_h.end(), inst.v) != hubs_h.end();
    if (!g_hub && !h_hub) t[3].bad.push_back({code, "neither operand is wheel-like at the spliced vertex"});
    auto star_covered = [](const MultiGraph& g, Vertex u, const std::vector<RemovableClass>& classes) {
      for (EdgeId e : g.incident(u)) {
        const bool in = std::any_of(classes.begin(), classes.end(), [&](const RemovableClass& c) {
          return c.e == e || (c.f && *c.f == e);
        });
        if (!in) return false;
      }
      return true;
    };
    if (g_hub && star_covered(inst.g, inst.u, cg) && hubs_h.empty()) {
      t[3].bad.push_back({code, "second operand is not wheel-like"});
    }
    if (h_hub && star_covered(inst.h, inst.v, ch) && hubs_g.empty()) {
      t[3].bad.push_back({code, "first operand is not wheel-like"});
    }
  }
}

}  // namespace

std::vector<SuiteResult> lemma_suites(std::span<const AnalysisReport> corpus, const CensusConfig& config) {
  const int workers = config.workers;
  std::vector<const AnalysisReport*> all;
  std::vector<const AnalysisReport*> mc;
  std::vector<const AnalysisReport*> bricks;
  for (const AnalysisReport& r : corpus) {
    all.push_back(&r);
    if (r.matching_covered) mc.push_back(&r);
    if (r.brick) bricks.push_back(&r);
  }
  std::vector<SuiteResult> out;

  out.push_back(run_suite("barrier-iff-forbidden", all, workers, [](const AnalysisReport* r, Tally& t) {
    const MultiGraph& g = r->graph;
    if (!has_perfect_matching(g)) return;
    for (const Edge& e : g.edges()) {
      ++t.checked;
      const bool forbidden = is_forbidden(g, e.id);
      const bool barrier = find_barrier_containing(g, e.u, e.v).has_value();
      if (forbidden != barrier) {
        t.bad.push_back({r->canonical, "edge " + edge_text(g, e.id) + (forbidden ? " forbidden without" : " allowed with") +
                                           " a barrier containing both ends"});
      }
    }
  }));

  {
    // Random splicings of matching covered corpus graphs.
    std::vector<const AnalysisReport*> pool;
    for (const AnalysisReport* r : mc) {
      if (r->n >= 2) pool.push_back(r);
    }
    std::map<int, std::vector<std::pair<std::size_t, Vertex>>> by_degree;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (Vertex v = 0; v < pool[i]->n; ++v) by_degree[pool[i]->graph.degree(v)].emplace_back(i, v);
    }
    struct Item {
      std::size_t a;
      Vertex u;
      std::size_t b;
      Vertex v;
      std::vector<EdgeId> order;
    };
    std::mt19937 rng(20240617);
    std::vector<Item> items;
    if (!pool.empty()) {
      while (items.size() < 1000) {
        const std::size_t a = std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng);
        const Vertex u = std::uniform_int_distribution<Vertex>(0, pool[a]->n - 1)(rng);
        const auto& cand = by_degree[pool[a]->graph.degree(u)];
        const auto [b, v] = cand[std::uniform_int_distribution<std::size_t>(0, cand.size() - 1)(rng)];
        std::vector<EdgeId> order = pool[b]->graph.incident(v);
        std::shuffle(order.begin(), order.end(), rng);
        items.push_back({a, u, b, v, std::move(order)});
      }
    }
    auto s = run_suite("splice-preserves-matching-covered", items, workers, [&](const Item& it, Tally& t) {
      const MultiGraph& g = pool[it.a]->graph;
      const MultiGraph& h = pool[it.b]->graph;
      SpliceMap map;
      map.u = it.u;
      map.v = it.v;
      for (std::size_t j = 0; j < it.order.size(); ++j) map.theta.emplace_back(g.incident(it.u)[j], it.order[j]);
      const SpliceResult res = splice(g, h, map);
      ++t.checked;
      const std::string label = pool[it.a]->canonical + "(" + std::to_string(it.u) + ") . " + pool[it.b]->canonical +
                                "(" + std::to_string(it.v) + ")";
      if (!is_matching_covered(res.graph)) t.bad.push_back({label, "splice is not matching covered"});
      if (!isomorphic(contract(res.graph, res.g_side.complement()).graph, g) ||
          !isomorphic(contract(res.graph, res.g_side).graph, h)) {
        t.bad.push_back({label, "splice cut contractions are not the operands"});
      }
    });
    s.data["seed"] = 20240617;
    out.push_back(std::move(s));
  }

  {
    const std::set<std::string> expected{canonical_code(named_graph("k4")), canonical_code(named_graph("c6bar")),
                                         canonical_code(named_graph("r8"))};
    std::vector<const AnalysisReport*> items;
    for (const AnalysisReport* r : bricks) {
      if (r->graph.is_simple() && r->near_bipartite) items.push_back(r);
    }
    auto s = run_suite("near-bipartite-nonadjacent-removable", items, workers, [&](const AnalysisReport* r, Tally& t) {
      ++t.checked;
      if (has_two_nonadjacent_removable_edges(r->graph, r->classes)) return;
      if (!expected.count(r->canonical)) t.bad.push_back({r->canonical, "no two nonadjacent removable edges"});
    });
    std::vector<std::string> exceptions;
    for (const AnalysisReport* r : items) {
      if (!has_two_nonadjacent_removable_edges(r->graph, r->classes)) exceptions.push_back(r->canonical);
    }
    for (const std::string& e : expected) {
      const bool in_corpus = std::any_of(items.begin(), items.end(), [&](auto* r) { return r->canonical == e; });
      const bool excepted = std::find(exceptions.begin(), exceptions.end(), e) != exceptions.end();
      if (in_corpus && !excepted) s.counterexamples.push_back({e, "listed exception has two nonadjacent removable edges"});
    }
    s.data["exceptions"] = exceptions;
    out.push_back(std::move(s));

    out.push_back(run_suite("near-bipartite-wheel-like-iff-k4", items, workers, [&](const AnalysisReport* r, Tally& t) {
      ++t.checked;
      const bool k4 = r->canonical == canonical_code(named_graph("k4"));
      if (r->wheel_like != k4) t.bad.push_back({r->canonical, r->wheel_like ? "wheel-like but not K4" : "K4 not wheel-like"});
    }));
  }

  {
    auto s = run_suite("nonsolid-has-robust-cut", bricks, workers, [](const AnalysisReport* r, Tally& t) {
      if (!r->solid || !r->robust_cut || *r->solid) return;
      ++t.checked;
      if (!*r->robust_cut) t.bad.push_back({r->canonical, "nonsolid brick without a robust cut"});
    });
    for (const AnalysisReport* r : bricks) {
      if (!r->solid || !r->robust_cut) {
        ++s.skipped;
        s.skip_reasons.push_back(r->canonical + ": " + join(r->notes, "; "));
      }
    }
    out.push_back(std::move(s));
  }

  {
    // Refinements of robust cuts.
    std::vector<const AnalysisReport*> nonsolid;
    for (const AnalysisReport* r : bricks) {
      if (r->solid && !*r->solid) nonsolid.push_back(r);
    }
    std::vector<std::array<Tally, 3>> tallies(nonsolid.size());
    for_each_index(nonsolid.size(), workers, [&](std::size_t i) {
      const AnalysisReport* r = nonsolid[i];
      const MultiGraph& g = r->graph;
      auto& t = tallies[i];
      const auto cut = find_robust_cut(g, config.budget);
      if (!cut) return;
      ++t[0].checked;
      const auto ref = robust_refinement(g, cut->shore, config.budget);
      if (!ref) {
        t[0].bad.push_back({r->canonical, "robust cut without a refinement"});
        return;
      }
      const auto classes_h = removable_classes(ref->h);
      const auto flags_h = removable_edge_flags(ref->h, classes_h);
      for (Vertex c : {ref->h_x_prime, ref->h_x_double_prime_bar}) {
        ++t[1].checked;
        for (EdgeId e : ref->h.incident(c)) {
          if (!flags_h[e]) t[1].bad.push_back({r->canonical, "edge " + edge_text(ref->h, e) + " at a contracted vertex is not removable in H"});
        }
      }
      const auto classes_g = removable_classes(g);
      const auto flags_g = removable_edge_flags(g, classes_g);
      // (inner shore, opposite contracted set, vertex of H for the inner shore)
      const std::tuple<VertexSet, VertexSet, Vertex> orientations[] = {
          {ref->x_prime, ref->x_double_prime.complement(), ref->h_x_prime},
          {ref->x_double_prime.complement(), ref->x_prime, ref->h_x_double_prime_bar}};
      for (const auto& [inner, opposite, hv] : orientations) {
        const Contraction outer = contract(g, inner.complement());
        const auto hubs = odd_wheel_hubs(outer.graph);
        if (std::find(hubs.begin(), hubs.end(), outer.contracted) == hubs.end()) continue;
        if (ref->h.neighbors(hv).size() < 2) continue;
        ++t[2].checked;
        std::uint64_t zone = inner.bits();
        for (Vertex v : inner.members()) zone |= g.neighbor_bits(v);
        zone &= ~opposite.bits();
        const bool found = std::any_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
          return flags_g[e.id] && ((zone >> e.u) & 1U) && ((zone >> e.v) & 1U);
        });
        if (!found) t[2].bad.push_back({r->canonical, "no removable edge near the wheel side of the refinement"});
      }
    });
    const char* names[] = {"robust-cut-refinement", "refinement-contracted-edges-removable",
                           "refinement-removable-edge-near-wheel"};
    for (int k = 0; k < 3; ++k) {
      SuiteResult s;
      s.name = names[k];
      for (auto& t : tallies) {
        s.checked += t[k].checked;
        for (auto& c : t[k].bad) s.counterexamples.push_back(c);
      }
      out.push_back(std::move(s));
    }
  }

  {
    const std::string w5 = canonical_code(named_graph("w5"));
    std::vector<const AnalysisReport*> six;
    for (const AnalysisReport* r : bricks) {
      if (r->n == 6 && r->graph.is_simple()) six.push_back(r);
    }
    auto s = run_suite("six-vertex-nonsolid-or-w5", six, workers, [&](const AnalysisReport* r, Tally& t) {
      if (!r->solid) return;
      ++t.checked;
      if (*r->solid && r->canonical != w5) t.bad.push_back({r->canonical, "solid six-vertex brick other than W5"});
    });
    out.push_back(std::move(s));
    out.push_back(run_suite("six-vertex-planar-wheel-like-iff-w5", six, workers, [&](const AnalysisReport* r, Tally& t) {
      if (!r->planar) return;
      ++t.checked;
      if (r->wheel_like != (r->canonical == w5)) t.bad.push_back({r->canonical, "wheel-like status disagrees with W5"});
    }));
  }

  out.push_back(run_suite("planar-solid-is-odd-wheel", bricks, workers, [](const AnalysisReport* r, Tally& t) {
    if (!r->graph.is_simple() || !r->planar || !r->solid || !*r->solid) return;
    ++t.checked;
    if (!is_odd_wheel(r->graph)) t.bad.push_back({r->canonical, "planar solid brick that is not an odd wheel"});
  }));

  out.push_back(run_suite("separating-contractions-planar", bricks, workers, [](const AnalysisReport* r, Tally& t) {
    if (!r->planar) return;
    const MultiGraph& g = r->graph;
    for (const VertexSet& x : nontrivial_odd_shores(g.vertex_count())) {
      const MultiGraph a = contract(g, x).graph;
      const MultiGraph b = contract(g, x.complement()).graph;
      if (!is_matching_covered(a) || !is_matching_covered(b)) continue;
      ++t.checked;
      if (!is_planar(a) || !is_planar(b)) {
        std::vector<std::string> m;
        for (Vertex v : x.members()) m.push_back(std::to_string(v));
        t.bad.push_back({r->canonical, "nonplanar contraction along {" + join(m, ",") + "}"});
      }
    }
  }));

  out.push_back(run_suite("triangle-condition-nonremovable", mc, workers, [](const AnalysisReport* r, Tally& t) {
    const auto flags = removable_edge_flags(r->graph, r->classes);
    for (const Edge& e : r->graph.edges()) {
      if (!triangle_condition(r->graph, e.id)) continue;
      ++t.checked;
      if (flags[e.id]) t.bad.push_back({r->canonical, "edge " + edge_text(r->graph, e.id) + " is removable"});
    }
  }));

  out.push_back(run_suite("brick-three-connected-bicritical", bricks, workers, [](const AnalysisReport* r, Tally& t) {
    ++t.checked;
    if (!is_three_connected(r->graph)) t.bad.push_back({r->canonical, "brick is not 3-connected"});
    if (!is_bicritical(r->graph)) t.bad.push_back({r->canonical, "brick is not bicritical"});
  }));

  out.push_back(run_suite("tight-cut-is-separating", mc, workers, [&](const AnalysisReport* r, Tally& t) {
    for (const VertexSet& x : nontrivial_odd_shores(r->n)) {
      const CutReport c = classify_cut(r->graph, x, config.budget);
      if (!c.tight) continue;
      ++t.checked;
      if (!c.separating) t.bad.push_back({r->canonical, "tight cut that is not separating"});
    }
  }));

  {
    std::vector<const AnalysisReport*> small;
    for (const AnalysisReport* r : bricks) {
      if (r->n <= 6) small.push_back(r);
    }
    out.push_back(run_suite("parallel-copy-removable", small, workers, [](const AnalysisReport* r, Tally& t) {
      for (const Edge& e : r->graph.edges()) {
        ++t.checked;
        const MultiGraph h = add_parallel(r->graph, e.id);
        const EdgeId copy = r->graph.next_id();
        if (!is_removable_edge(h, e.id) || !is_removable_edge(h, copy)) {
          t.bad.push_back({r->canonical, "doubled edge " + edge_text(r->graph, e.id) + " is not removable"});
        }
        if (!r->wheel_like && is_wheel_like(h)) {
          t.bad.push_back({r->canonical, "doubling " + edge_text(r->graph, e.id) + " made it wheel-like"});
        }
      }
    }));
  }

  {
    const std::vector<SpliceInstance> constructed = constructed_splices(corpus, 6, workers);
    std::vector<std::array<Tally, 4>> tallies(constructed.size());
    for_each_index(constructed.size(), workers, [&](std::size_t i) { check_splice(constructed[i], tallies[i]); });
    const char* names[] = {"splice-removable-in-both-contractions", "splice-contraction-doubleton",
                           "splice-doubletons-combine", "splice-wheel-like-operand"};
    for (int k = 0; k < 4; ++k) {
      SuiteResult s;
      s.name = names[k];
      for (auto& t : tallies) {
        s.checked += t[k].checked;
        for (auto& c : t[k].bad) s.counterexamples.push_back(c);
      }
      s.data["constructed_instances"] = constructed.size();
      out.push_back(std::move(s));
    }
    out.push_back(engine_cross_validation(corpus, constructed, config));
  }
  return out;
}

SuiteResult engine_cross_validation(std::span<const AnalysisReport> corpus,
                                    std::span<const SpliceInstance> constructed, const CensusConfig& config) {
  std::vector<std::pair<std::string, MultiGraph>> graphs;
  for (const AnalysisReport& r : corpus) {
    if (r.n <= 10) graphs.emplace_back(r.canonical, r.graph);
  }
  for (const SpliceInstance& s : constructed) {
    if (s.result.graph.vertex_count() <= 10) graphs.emplace_back("", s.result.graph);
  }
  for (const std::string& name : named_graph_names()) {
    const MultiGraph g = named_graph(name);
    if (g.vertex_count() <= 10) graphs.emplace_back(name, g);
  }
  auto s = run_suite("engine-cross-validation", graphs, config.workers, [](const auto& item, Tally& t) {
    const MultiGraph& g = item.second;
    const std::string code = item.first.empty() ? canonical_code(g) : item.first;
    ++t.checked;
    if (max_matching(g).size() != max_matching_exhaustive(g).size()) {
      t.bad.push_back({code, "blossom and exhaustive matching sizes differ"});
    }
    if (is_matching_covered(g) && brick_count(g, ShorePolicy::smallest) != brick_count(g, ShorePolicy::largest)) {
      t.bad.push_back({code, "b(G) depends on the decomposition order"});
    }
    const std::string text = g.is_simple() ? emit_graph6(g) : emit_sparse6(g);
    const MultiGraph back = g.is_simple() ? parse_graph6(text) : parse_sparse6(text);
    const std::string again = g.is_simple() ? emit_graph6(back) : emit_sparse6(back);
    if (again != text || !isomorphic(back, g)) t.bad.push_back({code, "format round trip is not exact"});
  });
  // The census stream itself: canonical graph6 codes re-emit byte for byte.
  for (const AnalysisReport& r : corpus) {
    if (!r.graph.is_simple()) continue;
    ++s.checked;
    if (emit_graph6(parse_graph6(r.canonical)) != r.canonical) {
      s.counterexamples.push_back({r.canonical, "graph6 code does not round-trip"});
    }
  }
  return s;
}

}  // namespace brickwork
