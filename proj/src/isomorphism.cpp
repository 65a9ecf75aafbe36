// Degree-partition-seeded backtracking isomorphism search.
//
// Colors start as vertex degrees (forced pairs get private colors) and are
// refined jointly over both graphs until stable; a candidate image must share
// the color of its preimage and agree on adjacency with everything mapped so
// far.

#include <algorithm>
#include <map>
#include <string>

#include "pathsat/permutation.hpp"

namespace pathsat {
namespace {

struct JointColoring {
  std::vector<int> g_color;
  std::vector<int> h_color;
  bool histograms_match = true;
};

JointColoring refine(const Graph& g, const Graph& h, std::span<const VertexPair> forced) {
  const int n = g.order();
  JointColoring c;
  c.g_color.resize(n);
  c.h_color.resize(n);
  for (int v = 0; v < n; ++v) {
    c.g_color[v] = g.degree(v);
    c.h_color[v] = h.degree(v);
  }
  for (size_t i = 0; i < forced.size(); ++i) {
    const int private_color = kMaxOrder + static_cast<int>(i);
    c.g_color[forced[i].first] = private_color;
    c.h_color[forced[i].second] = private_color;
  }

  auto class_count = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> all(a);
    all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    return static_cast<int>(std::unique(all.begin(), all.end()) - all.begin());
  };

  int classes = class_count(c.g_color, c.h_color);
  while (true) {
    std::map<std::vector<int>, int> ids;
    auto signature = [](const Graph& graph, const std::vector<int>& col, Vertex v) {
      std::vector<int> sig;
      sig.push_back(col[v]);
      graph.neighbors(v).for_each([&](Vertex u) { sig.push_back(col[u]); });
      std::sort(sig.begin() + 1, sig.end());
      return sig;
    };
    std::vector<int> ng(n), nh(n);
    for (int v = 0; v < n; ++v) {
      ng[v] = ids.try_emplace(signature(g, c.g_color, v), static_cast<int>(ids.size())).first->second;
    }
    for (int v = 0; v < n; ++v) {
      nh[v] = ids.try_emplace(signature(h, c.h_color, v), static_cast<int>(ids.size())).first->second;
    }
    c.g_color = std::move(ng);
    c.h_color = std::move(nh);
    const int next = class_count(c.g_color, c.h_color);
    if (next == classes) break;
    classes = next;
  }

  std::vector<int> hg(c.g_color), hh(c.h_color);
  std::sort(hg.begin(), hg.end());
  std::sort(hh.begin(), hh.end());
  c.histograms_match = hg == hh;
  return c;
}

class Backtracker {
 public:
  Backtracker(const Graph& g, const Graph& h, JointColoring colors, std::span<const VertexPair> forced)
      : g_(g), h_(h), colors_(std::move(colors)), map_(g.order(), -1) {
    choose_order(forced);
  }

  std::optional<VertexPermutation> run(std::span<const VertexPair> forced) {
    for (const auto& [x, y] : forced) {
      if (!consistent(x, y)) return std::nullopt;
      assign(x, y);
    }
    if (!search(static_cast<int>(forced.size()))) return std::nullopt;
    return VertexPermutation(map_);
  }

 private:
  void choose_order(std::span<const VertexPair> forced) {
    const int n = g_.order();
    VertexSet placed;
    std::vector<int> class_size(2 * kMaxOrder + n + 1, 0);
    for (int v = 0; v < n; ++v) ++class_size[colors_.g_color[v]];
    for (const auto& pr : forced) {
      order_.push_back(pr.first);
      placed.insert(pr.first);
    }
    while (static_cast<int>(order_.size()) < n) {
      Vertex best = -1;
      int best_links = -1, best_class = 0;
      for (Vertex v = 0; v < n; ++v) {
        if (placed.contains(v)) continue;
        const int links = (g_.neighbors(v) & placed).size();
        const int cls = class_size[colors_.g_color[v]];
        if (links > best_links || (links == best_links && cls < best_class)) {
          best = v;
          best_links = links;
          best_class = cls;
        }
      }
      order_.push_back(best);
      placed.insert(best);
    }
  }

  bool consistent(Vertex x, Vertex y) const {
    if (used_h_.contains(y)) return false;
    if (colors_.g_color[x] != colors_.h_color[y]) return false;
    VertexSet image;
    (g_.neighbors(x) & mapped_g_).for_each([&](Vertex u) { image.insert(map_[u]); });
    return image == (h_.neighbors(y) & used_h_);
  }

  void assign(Vertex x, Vertex y) {
    map_[x] = y;
    mapped_g_.insert(x);
    used_h_.insert(y);
  }

  void unassign(Vertex x) {
    used_h_.erase(map_[x]);
    mapped_g_.erase(x);
    map_[x] = -1;
  }

  bool search(int pos) {
    if (pos == g_.order()) return true;
    const Vertex x = order_[pos];
    VertexSet candidates = h_.vertices() - used_h_;
    const VertexSet mapped_nbrs = g_.neighbors(x) & mapped_g_;
    if (!mapped_nbrs.empty()) candidates &= h_.neighbors(map_[mapped_nbrs.first()]);
    bool done = false;
    candidates.for_each([&](Vertex y) {
      if (done || !consistent(x, y)) return;
      assign(x, y);
      if (search(pos + 1)) {
        done = true;
        return;
      }
      unassign(x);
    });
    return done;
  }

  const Graph& g_;
  const Graph& h_;
  JointColoring colors_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  VertexSet mapped_g_;
  VertexSet used_h_;
};

}  // namespace

std::optional<VertexPermutation> find_isomorphism(const Graph& g, const Graph& h,
                                                  std::span<const VertexPair> forced) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  for (const auto& [x, y] : forced) {
    if (x < 0 || x >= g.order() || y < 0 || y >= h.order()) {
      throw GraphError("forced pair out of range");
    }
  }
  JointColoring colors = refine(g, h, forced);
  if (!colors.histograms_match) return std::nullopt;
  Backtracker bt(g, h, std::move(colors), forced);
  return bt.run(forced);
}

std::optional<VertexPermutation> are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() > kMaxIsomorphismOrder || h.order() > kMaxIsomorphismOrder) {
    throw GraphError("are_isomorphic supports at most " + std::to_string(kMaxIsomorphismOrder) +
                     " vertices");
  }
  return find_isomorphism(g, h);
}

}  // namespace pathsat
