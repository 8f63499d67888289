#include "brickwork/planarity.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "brickwork/errors.hpp"

namespace brickwork {

bool is_planar(const MultiGraph& g) {
  const MultiGraph s = underlying_simple(g);
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(s.vertex_count());
  for (const Edge& e : s.edges()) boost::add_edge(e.u, e.v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

namespace {

using Mask = std::uint64_t;

class WitnessFinder {
 public:
  WitnessFinder(const MultiGraph& g, const WitnessSearch& search)
      : n_(g.vertex_count()), adj_(n_, 0), search_(search) {
    if (n_ > VertexSet::kMaxVertices) throw PreconditionError("witness search supports at most 64 vertices");
    for (const Edge& e : g.edges()) {
      adj_[e.u] |= Mask{1} << e.v;
      adj_[e.v] |= Mask{1} << e.u;
    }
  }

  std::optional<KuratowskiWitness> run() {
    std::vector<Vertex> deg3;
    std::vector<Vertex> deg4;
    for (Vertex v = 0; v < n_; ++v) {
      const int d = std::popcount(adj_[v]);
      if (d >= 3) deg3.push_back(v);
      if (d >= 4) deg4.push_back(v);
    }
    if (!search_.k33_class_hint.empty()) {
      const auto& a = search_.k33_class_hint;
      if (a.size() != 3) throw PreconditionError("a K3,3 class hint needs three vertices");
      if (auto w = try_k33_with_side(a, deg3)) return w;
    }
    // K3,3: unordered pairs of disjoint triples.
    auto triples = combinations(deg3, 3);
    for (const auto& a : triples) {
      if (auto w = try_k33_with_side(a, deg3, true)) return w;
    }
    for (const auto& five : combinations(deg4, 5)) {
      std::vector<std::pair<int, int>> pattern;
      for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) pattern.emplace_back(i, j);
      }
      if (auto paths = route(five, pattern)) {
        return KuratowskiWitness{KuratowskiKind::k5, five, std::move(*paths)};
      }
    }
    return std::nullopt;
  }

 private:
  static std::vector<std::vector<Vertex>> combinations(const std::vector<Vertex>& pool, int k) {
    std::vector<std::vector<Vertex>> out;
    const int m = static_cast<int>(pool.size());
    if (m < k) return out;
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<Vertex> c;
      for (int i : pick) c.push_back(pool[i]);
      out.push_back(std::move(c));
      int i = k - 1;
      while (i >= 0 && pick[i] == m - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
  }

  std::optional<KuratowskiWitness> try_k33_with_side(const std::vector<Vertex>& a,
                                                     const std::vector<Vertex>& deg3,
                                                     bool ordered = false) {
    std::vector<Vertex> rest;
    for (Vertex v : deg3) {
      if (std::find(a.begin(), a.end(), v) == a.end()) rest.push_back(v);
    }
    std::vector<std::pair<int, int>> pattern;
    for (int i = 0; i < 3; ++i) {
      for (int j = 3; j < 6; ++j) pattern.emplace_back(i, j);
    }
    for (const auto& b : combinations(rest, 3)) {
      if (ordered && b.front() < a.front()) continue;
      std::vector<Vertex> branch = a;
      branch.insert(branch.end(), b.begin(), b.end());
      if (auto paths = route(branch, pattern)) {
        return KuratowskiWitness{KuratowskiKind::k33, branch, std::move(*paths)};
      }
    }
    return std::nullopt;
  }

  void tick() {
    if (++steps_ > search_.max_steps) {
      throw BudgetExceeded("Kuratowski witness search exceeded " + std::to_string(search_.max_steps) +
                           " steps");
    }
  }

  bool reachable(Vertex from, Vertex to, Mask free) const {
    Mask seen = Mask{1} << from;
    Mask frontier = seen;
    while (frontier != 0) {
      Mask grow = 0;
      for (Mask b = frontier; b != 0; b &= b - 1) grow |= adj_[std::countr_zero(b)];
      if ((grow >> to) & 1) return true;
      frontier = grow & free & ~seen;
      seen |= frontier;
    }
    return false;
  }

  /// Routes every pattern edge as a path through non-branch vertices, all
  /// paths internally disjoint.
  std::optional<std::vector<std::vector<Vertex>>> route(const std::vector<Vertex>& branch,
                                                        const std::vector<std::pair<int, int>>& pattern) {
    // Each branch vertex needs one distinct neighbour per incident pattern edge.
    Mask branch_bits = 0;
    for (Vertex v : branch) branch_bits |= Mask{1} << v;
    std::vector<int> need(branch.size(), 0);
    for (auto [i, j] : pattern) {
      ++need[i];
      ++need[j];
    }
    for (std::size_t i = 0; i < branch.size(); ++i) {
      if (std::popcount(adj_[branch[i]]) < need[i]) return std::nullopt;
    }
    std::vector<std::vector<Vertex>> paths(pattern.size());
    const Mask all = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
    Mask free = all & ~branch_bits;
    auto place = [&](auto&& self, std::size_t k) -> bool {
      if (k == pattern.size()) return true;
      const Vertex s = branch[pattern[k].first];
      const Vertex t = branch[pattern[k].second];
      std::vector<Vertex> path{s};
      auto extend = [&](auto&& ext, Vertex cur) -> bool {
        tick();
        if ((adj_[cur] >> t) & 1) {
          path.push_back(t);
          paths[k] = path;
          if (self(self, k + 1)) return true;
          path.pop_back();
        }
        for (Mask c = adj_[cur] & free; c != 0; c &= c - 1) {
          const Vertex w = std::countr_zero(c);
          free &= ~(Mask{1} << w);
          if (reachable(w, t, free)) {
            path.push_back(w);
            if (ext(ext, w)) return true;
            path.pop_back();
          }
          free |= Mask{1} << w;
        }
        return false;
      };
      return extend(extend, s);
    };
    if (place(place, 0)) return paths;
    return std::nullopt;
  }

  int n_;
  std::vector<Mask> adj_;
  const WitnessSearch& search_;
  std::size_t steps_ = 0;
};

}  // namespace

std::optional<KuratowskiWitness> kuratowski_witness(const MultiGraph& g, const WitnessSearch& search) {
  return WitnessFinder(underlying_simple(g), search).run();
}

std::string validate_witness(const MultiGraph& g, const KuratowskiWitness& w) {
  const std::size_t branches = w.kind == KuratowskiKind::k5 ? 5 : 6;
  if (w.branch.size() != branches) return "wrong number of branch vertices";
  std::vector<std::pair<int, int>> pattern;
  for (int i = 0; i < static_cast<int>(branches); ++i) {
    for (int j = i + 1; j < static_cast<int>(branches); ++j) {
      if (w.kind == KuratowskiKind::k5 || (i < 3 && j >= 3)) pattern.emplace_back(i, j);
    }
  }
  if (w.paths.size() != pattern.size()) return "wrong number of paths";
  std::vector<int> owner(g.vertex_count(), -1);
  for (std::size_t i = 0; i < w.branch.size(); ++i) {
    const Vertex v = w.branch[i];
    if (v < 0 || v >= g.vertex_count()) return "branch vertex out of range";
    if (owner[v] != -1) return "repeated branch vertex";
    owner[v] = -2;
  }
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    const auto& p = w.paths[k];
    if (p.size() < 2) return "path too short";
    const Vertex s = w.branch[pattern[k].first];
    const Vertex t = w.branch[pattern[k].second];
    if (!((p.front() == s && p.back() == t) || (p.front() == t && p.back() == s))) {
      return "path " + std::to_string(k) + " joins the wrong branch vertices";
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] < 0 || p[i] >= g.vertex_count() || p[i + 1] < 0 || p[i + 1] >= g.vertex_count()) {
        return "path vertex out of range";
      }
      if (!g.adjacent(p[i], p[i + 1])) return "path " + std::to_string(k) + " uses a non-edge";
    }
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (owner[p[i]] != -1) return "paths are not internally disjoint";
      owner[p[i]] = static_cast<int>(k);
    }
  }
  // A direct edge may serve only one path.
  for (std::size_t a = 0; a < pattern.size(); ++a) {
    for (std::size_t b = a + 1; b < pattern.size(); ++b) {
      if (w.paths[a].size() == 2 && w.paths[b].size() == 2) {
        auto [x, y] = std::minmax(w.paths[a][0], w.paths[a][1]);
        auto [z, q] = std::minmax(w.paths[b][0], w.paths[b][1]);
        if (x == z && y == q) return "edge used twice";
      }
    }
  }
  return {};
}

}  // namespace brickwork
