#include "brickwork/canon.hpp"

#include <algorithm>
#include <map>

#include "brickwork/errors.hpp"
#include "brickwork/io.hpp"

namespace brickwork {

namespace {

using Cells = std::vector<std::vector<Vertex>>;

class Canonizer {
 public:
  Canonizer(const MultiGraph& g, std::span<const int> colours)
      : n_(g.vertex_count()), mult_(static_cast<std::size_t>(n_) * n_, 0), colours_(n_, 0) {
    for (const Edge& e : g.edges()) {
      auto& a = mult_[idx(e.u, e.v)];
      auto& b = mult_[idx(e.v, e.u)];
      if (a < 255) {
        ++a;
        ++b;
      }
    }
    if (!colours.empty()) {
      if (static_cast<int>(colours.size()) != n_) {
        throw PreconditionError("one colour per vertex is required");
      }
      std::copy(colours.begin(), colours.end(), colours_.begin());
    }
  }

  CanonicalLabeling run() {
    std::map<int, std::vector<Vertex>> by_colour;
    for (Vertex v = 0; v < n_; ++v) by_colour[colours_[v]].push_back(v);
    Cells cells;
    for (auto& [c, members] : by_colour) cells.push_back(members);
    search(std::move(cells));
    CanonicalLabeling out;
    out.position.assign(n_, 0);
    for (int i = 0; i < n_; ++i) out.position[best_order_[i]] = i;
    out.certificate = best_;
    return out;
  }

 private:
  std::size_t idx(Vertex a, Vertex b) const { return static_cast<std::size_t>(a) * n_ + b; }

  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<int> cell_of(n_);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        for (Vertex v : cells[c]) cell_of[v] = static_cast<int>(c);
      }
      Cells next;
      next.reserve(cells.size());
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, Vertex>> keyed;
        keyed.reserve(cell.size());
        for (Vertex v : cell) {
          std::vector<int> sig(cells.size(), 0);
          for (Vertex w = 0; w < n_; ++w) sig[cell_of[w]] += mult_[idx(v, w)];
          keyed.emplace_back(std::move(sig), v);
        }
        std::sort(keyed.begin(), keyed.end());
        std::size_t start = next.size();
        next.push_back({keyed[0].second});
        for (std::size_t i = 1; i < keyed.size(); ++i) {
          if (keyed[i].first != keyed[i - 1].first) next.push_back({});
          next.back().push_back(keyed[i].second);
        }
        if (next.size() - start > 1) changed = true;
      }
      cells = std::move(next);
    }
  }

  bool twins(Vertex a, Vertex b) const {
    for (Vertex x = 0; x < n_; ++x) {
      if (x == a || x == b) continue;
      if (mult_[idx(a, x)] != mult_[idx(b, x)]) return false;
    }
    return true;
  }

  void leaf(const Cells& cells) {
    std::vector<Vertex> order;
    order.reserve(n_);
    for (const auto& cell : cells) order.push_back(cell[0]);
    std::string cert;
    cert.reserve(static_cast<std::size_t>(n_) * (n_ + 1) / 2 + n_ + 1);
    cert.push_back(static_cast<char>(n_));
    for (Vertex v : order) cert.push_back(static_cast<char>(colours_[v] & 0x7f));
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) cert.push_back(static_cast<char>(mult_[idx(order[i], order[j])]));
    }
    if (best_order_.empty() || cert > best_) {
      best_ = std::move(cert);
      best_order_ = std::move(order);
    }
  }

  void search(Cells cells) {
    refine(cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t pos = static_cast<std::size_t>(target - cells.begin());
    const std::vector<Vertex> cell = *target;
    std::vector<Vertex> tried;
    for (Vertex v : cell) {
      // Swapping two twins is an automorphism fixing everything already
      // individualised, so their subtrees yield the same leaves.
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(u, v); })) continue;
      tried.push_back(v);
      Cells branch;
      branch.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != pos) {
          branch.push_back(cells[c]);
          continue;
        }
        branch.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex w : cell) {
          if (w != v) rest.push_back(w);
        }
        branch.push_back(std::move(rest));
      }
      search(std::move(branch));
    }
  }

  int n_;
  std::vector<unsigned char> mult_;
  std::vector<int> colours_;
  std::string best_;
  std::vector<Vertex> best_order_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const MultiGraph& g, std::span<const int> colours) {
  return Canonizer(g, colours).run();
}

MultiGraph relabel(const MultiGraph& g, std::span<const Vertex> position) {
  if (static_cast<int>(position.size()) != g.vertex_count()) {
    throw PreconditionError("relabel needs one position per vertex");
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    auto [a, b] = std::minmax(position[e.u], position[e.v]);
    edges.emplace_back(a, b);
  }
  std::sort(edges.begin(), edges.end());
  return MultiGraph(g.vertex_count(), edges);
}

std::string canonical_code(const MultiGraph& g) {
  MultiGraph c = relabel(g, canonical_labeling(g).position);
  return c.is_simple() ? emit_graph6(c) : emit_sparse6(c);
}

bool isomorphic(const MultiGraph& a, const MultiGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_labeling(a).certificate == canonical_labeling(b).certificate;
}

}  // namespace brickwork
