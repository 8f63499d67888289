#include "brickwork/matching.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>

#include "brickwork/errors.hpp"

namespace brickwork {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> adjacency(const MultiGraph& g) {
  if (g.vertex_count() > VertexSet::kMaxVertices) {
    throw PreconditionError("matching routines support at most 64 vertices");
  }
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Edmonds' blossom algorithm on G[alive]; returns mate (-1 if exposed).
class Blossom {
 public:
  Blossom(const std::vector<Mask>& adj, Mask alive)
      : n_(static_cast<int>(adj.size())), adj_(adj), alive_(alive),
        mate_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

  const std::vector<int>& run() {
    // Greedy start, then one augmenting search per exposed vertex.
    for (Mask b = alive_; b != 0; b &= b - 1) {
      const int v = std::countr_zero(b);
      if (mate_[v] != -1) continue;
      Mask free = adj_[v] & alive_;
      for (Mask c = free; c != 0; c &= c - 1) {
        const int w = std::countr_zero(c);
        if (mate_[w] == -1) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
    for (Mask b = alive_; b != 0; b &= b - 1) {
      const int v = std::countr_zero(b);
      if (mate_[v] != -1) continue;
      int end = find_path(v);
      while (end != -1) {
        const int pv = parent_[end];
        const int ppv = mate_[pv];
        mate_[end] = pv;
        mate_[pv] = end;
        end = ppv;
      }
    }
    return mate_;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (Mask c = adj_[v] & alive_; c != 0; c &= c - 1) {
        const int to = std::countr_zero(c);
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          const int cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (((alive_ >> i) & 1) && in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          used_[mate_[to]] = 1;
          queue.push_back(mate_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  const std::vector<Mask>& adj_;
  Mask alive_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
};

Matching mates_to_edges(const MultiGraph& g, const std::vector<int>& mate) {
  Matching m;
  for (const Edge& e : g.edges()) {
    if (mate[e.u] == e.v) {
      // Smallest id of the parallel class: edges() is ascending.
      bool first = std::none_of(m.begin(), m.end(), [&](EdgeId id) {
        const Edge& f = g.edge(id);
        return f.touches(e.u) || f.touches(e.v);
      });
      if (first) m.push_back(e.id);
    }
  }
  return m;
}

int matched_pairs(const std::vector<Mask>& adj, Mask alive) {
  Blossom b(adj, alive);
  const auto& mate = b.run();
  int size = 0;
  for (int v : mate) size += v != -1;
  return size / 2;
}

}  // namespace

Matching max_matching(const MultiGraph& g) {
  const auto adj = adjacency(g);
  Blossom b(adj, full_mask(g.vertex_count()));
  return mates_to_edges(g, b.run());
}

Matching max_matching_exhaustive(const MultiGraph& g) {
  const auto adj = adjacency(g);
  std::unordered_map<Mask, int> memo;
  auto best = [&](auto&& self, Mask mask) -> int {
    if (mask == 0) return 0;
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const int v = std::countr_zero(mask);
    const Mask rest = mask & (mask - 1);
    int value = self(self, rest);
    for (Mask c = adj[v] & rest; c != 0; c &= c - 1) {
      const int w = std::countr_zero(c);
      value = std::max(value, 1 + self(self, rest & ~(Mask{1} << w)));
    }
    memo.emplace(mask, value);
    return value;
  };
  std::vector<int> mate(g.vertex_count(), -1);
  Mask mask = full_mask(g.vertex_count());
  while (mask != 0) {
    const int target = best(best, mask);
    const int v = std::countr_zero(mask);
    const Mask rest = mask & (mask - 1);
    if (best(best, rest) == target) {
      mask = rest;
      continue;
    }
    for (Mask c = adj[v] & rest; c != 0; c &= c - 1) {
      const int w = std::countr_zero(c);
      const Mask after = rest & ~(Mask{1} << w);
      if (1 + best(best, after) == target) {
        mate[v] = w;
        mate[w] = v;
        mask = after;
        break;
      }
    }
  }
  return mates_to_edges(g, mate);
}

bool has_perfect_matching(const MultiGraph& g) {
  return has_perfect_matching(g, VertexSet::all(g.vertex_count()));
}

bool has_perfect_matching(const MultiGraph& g, const VertexSet& alive) {
  const int k = alive.size();
  if (k % 2 != 0) return false;
  if (k == 0) return true;
  return matched_pairs(adjacency(g), alive.bits()) * 2 == k;
}

std::vector<Matching> enumerate_perfect_matchings(const MultiGraph& g, std::size_t cap) {
  if (cap < 1) throw PreconditionError("matching cap must be at least 1");
  std::vector<Matching> out;
  const int n = g.vertex_count();
  if (n % 2 != 0) return out;
  std::vector<char> matched(n, 0);
  Matching current;
  auto rec = [&](auto&& self) -> void {
    int v = 0;
    while (v < n && matched[v]) ++v;
    if (v == n) {
      if (out.size() == cap) {
        throw BudgetExceeded("more than " + std::to_string(cap) + " perfect matchings");
      }
      Matching m = current;
      std::sort(m.begin(), m.end());
      out.push_back(std::move(m));
      return;
    }
    matched[v] = 1;
    for (EdgeId id : g.incident(v)) {
      const Vertex w = g.edge(id).other(v);
      if (matched[w]) continue;
      matched[w] = 1;
      current.push_back(id);
      self(self);
      current.pop_back();
      matched[w] = 0;
    }
    matched[v] = 0;
  };
  rec(rec);
  return out;
}

int odd_components(const MultiGraph& g, const VertexSet& s) {
  int odd = 0;
  for (const VertexSet& c : components(g, s)) odd += c.size() % 2;
  return odd;
}

bool satisfies_tutte_condition(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n > 24) throw PreconditionError("brute-force Tutte check is limited to 24 vertices");
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    const VertexSet set(n, s);
    if (odd_components(g, set) > set.size()) return false;
  }
  return true;
}

bool is_barrier(const MultiGraph& g, const VertexSet& s) {
  return odd_components(g, s) == s.size();
}

bool is_forbidden(const MultiGraph& g, EdgeId e) {
  const Edge& edge = g.edge(e);
  VertexSet alive = VertexSet::all(g.vertex_count());
  alive.erase(edge.u);
  alive.erase(edge.v);
  return !has_perfect_matching(g, alive);
}

std::optional<VertexSet> find_barrier_containing(const MultiGraph& g, Vertex u, Vertex v) {
  const int n = g.vertex_count();
  std::vector<Vertex> others;
  for (Vertex x = 0; x < n; ++x) {
    if (x != u && x != v) others.push_back(x);
  }
  const int m = static_cast<int>(others.size());
  for (int extra = 0; extra <= m; ++extra) {
    // Combinations of `others` of size `extra`, lexicographic.
    std::vector<int> pick(extra);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      VertexSet s = VertexSet::of(n, {u, v});
      for (int i : pick) s.insert(others[i]);
      if (is_barrier(g, s)) return s;
      int i = extra - 1;
      while (i >= 0 && pick[i] == m - extra + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < extra; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

bool is_matching_covered(const MultiGraph& g) {
  if (g.vertex_count() < 2 || g.vertex_count() % 2 != 0 || !is_connected(g)) return false;
  if (!PerfectMatchingIndex::supports(g)) return reference::is_matching_covered(g);
  if (!has_perfect_matching(g)) return false;
  try {
    return PerfectMatchingIndex(g, 2'000'000).matching_covered();
  } catch (const BudgetExceeded&) {
    return reference::is_matching_covered(g);
  }
}

bool is_bicritical(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n < 2 || n % 2 != 0) return false;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      VertexSet alive = VertexSet::all(n);
      alive.erase(u);
      alive.erase(v);
      if (!has_perfect_matching(g, alive)) return false;
    }
  }
  return true;
}

namespace reference {

bool is_matching_covered(const MultiGraph& g) {
  if (g.vertex_count() < 2 || !is_connected(g) || !has_perfect_matching(g)) return false;
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return is_forbidden(g, e.id); });
}

}  // namespace reference

// ------------------------------------------------------ PerfectMatchingIndex

bool PerfectMatchingIndex::supports(const MultiGraph& g) {
  if (g.vertex_count() > VertexSet::kMaxVertices) return false;
  int pairs = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) pairs += std::popcount(g.neighbor_bits(v));
  return pairs / 2 <= kMaxPairs;
}

PerfectMatchingIndex::PerfectMatchingIndex(const MultiGraph& g, std::size_t cap) : g_(g) {
  if (!supports(g)) throw PreconditionError("too many adjacent pairs for the matching index");
  const int n = g.vertex_count();
  std::vector<int> pair_at(static_cast<std::size_t>(n) * n, -1);
  pair_of_edge_.assign(g.next_id(), -1);
  for (const Edge& e : g.edges()) {
    auto [a, b] = std::minmax(e.u, e.v);
    int& slot = pair_at[static_cast<std::size_t>(a) * n + b];
    if (slot == -1) {
      slot = static_cast<int>(pairs_.size());
      pairs_.emplace_back(a, b);
      copies_.push_back(0);
      first_edge_.push_back(e.id);
    }
    pair_of_edge_[e.id] = slot;
    ++copies_[slot];
  }
  if (n % 2 == 0) {
    const auto adj = adjacency(g);
    PairMask current;
    auto rec = [&](auto&& self, Mask left) -> void {
      if (left == 0) {
        if (pms_.size() == cap) {
          throw BudgetExceeded("more than " + std::to_string(cap) + " perfect matchings");
        }
        pms_.push_back(current);
        return;
      }
      const int v = std::countr_zero(left);
      const Mask rest = left & (left - 1);
      for (Mask c = adj[v] & rest; c != 0; c &= c - 1) {
        const int w = std::countr_zero(c);
        const int p = pair_at[static_cast<std::size_t>(v) * n + w];
        current.set(p);
        self(self, rest & ~(Mask{1} << w));
        current.reset(p);
      }
    };
    rec(rec, full_mask(n));
  }
  const std::size_t words = (pms_.size() + 63) / 64;
  pms_with_pair_.assign(pairs_.size(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < pms_.size(); ++i) {
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      if (pms_[i].test(p)) pms_with_pair_[p][i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
}

Matching PerfectMatchingIndex::to_matching(const PairMask& pm) const {
  Matching m;
  for (std::size_t p = 0; p < pairs_.size(); ++p) {
    if (pm.test(p)) m.push_back(first_edge_[p]);
  }
  std::sort(m.begin(), m.end());
  return m;
}

PerfectMatchingIndex::PairMask PerfectMatchingIndex::dead_pairs(
    std::span<const EdgeId> deleted) const {
  PairMask dead;
  std::vector<int> removed(pairs_.size(), 0);
  for (EdgeId e : deleted) {
    if (e < 0 || e >= static_cast<EdgeId>(pair_of_edge_.size()) || pair_of_edge_[e] < 0) {
      throw PreconditionError("invalid edge id " + std::to_string(e));
    }
    const int p = pair_of_edge_[e];
    if (++removed[p] == copies_[p]) dead.set(p);
  }
  return dead;
}

bool PerfectMatchingIndex::matching_covered_without(std::span<const EdgeId> deleted) const {
  const int n = g_.vertex_count();
  if (n < 2 || n % 2 != 0 || pms_.empty()) return false;
  const PairMask dead = dead_pairs(deleted);
  // Connectivity of G - deleted.
  std::vector<Mask> adj(n, 0);
  for (std::size_t p = 0; p < pairs_.size(); ++p) {
    if (dead.test(p)) continue;
    auto [a, b] = pairs_[p];
    adj[a] |= Mask{1} << b;
    adj[b] |= Mask{1} << a;
  }
  Mask reach = 1;
  Mask frontier = 1;
  while (frontier != 0) {
    Mask grow = 0;
    for (Mask b = frontier; b != 0; b &= b - 1) grow |= adj[std::countr_zero(b)];
    frontier = grow & ~reach;
    reach |= grow;
  }
  if (reach != full_mask(n)) return false;

  const std::size_t words = (pms_.size() + 63) / 64;
  std::vector<std::uint64_t> avoid(words, ~std::uint64_t{0});
  if (pms_.size() % 64 != 0) avoid.back() = (std::uint64_t{1} << (pms_.size() % 64)) - 1;
  for (std::size_t p = 0; p < pairs_.size(); ++p) {
    if (!dead.test(p)) continue;
    for (std::size_t w = 0; w < words; ++w) avoid[w] &= ~pms_with_pair_[p][w];
  }
  for (std::size_t p = 0; p < pairs_.size(); ++p) {
    if (dead.test(p)) continue;
    bool covered = false;
    for (std::size_t w = 0; w < words && !covered; ++w) covered = (avoid[w] & pms_with_pair_[p][w]) != 0;
    if (!covered) return false;
  }
  return true;
}

PerfectMatchingIndex::PairMask PerfectMatchingIndex::cut_mask(const VertexSet& x) const {
  PairMask cut;
  for (std::size_t p = 0; p < pairs_.size(); ++p) {
    if (x.contains(pairs_[p].first) != x.contains(pairs_[p].second)) cut.set(p);
  }
  return cut;
}

std::optional<std::size_t> PerfectMatchingIndex::non_tight_witness(const PairMask& cut) const {
  for (std::size_t i = 0; i < pms_.size(); ++i) {
    if ((pms_[i] & cut).count() != 1) return i;
  }
  return std::nullopt;
}

}  // namespace brickwork
