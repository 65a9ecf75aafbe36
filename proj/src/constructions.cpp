#include "pathsat/constructions.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace pathsat {

namespace {

int mod(int x, int m) {
  const int r = x % m;
  return r < 0 ? r + m : r;
}

void require_gn(int n) {
  if (n < 2) throw GraphError("G_n requires n >= 2, got " + std::to_string(n));
  if (8 * n > kMaxOrder) throw GraphError("G_n with n = " + std::to_string(n) + " exceeds 128 vertices");
}

}  // namespace

GnVertex gn_normalize(GnVertex v, int n) { return {v.a, v.b, mod(v.j, 2 * n)}; }

int gn_index(GnVertex v, int n) {
  v = gn_normalize(v, n);
  return (2 * v.a + v.b) * 2 * n + v.j;
}

GnVertex gn_vertex(int index, int n) {
  const int row = index / (2 * n);
  return {row >> 1, row & 1, index % (2 * n)};
}

std::string gn_label(GnVertex v, int n) {
  v = gn_normalize(v, n);
  return "(" + std::to_string(v.a) + std::to_string(v.b) + "," + std::to_string(v.j) + ")";
}

std::array<GnVertex, 5> gn_neighbors(GnVertex v, int n) {
  if (n < 2) throw GraphError("G_n requires n >= 2, got " + std::to_string(n));
  const int a = v.a, b = v.b, j = v.j;
  const int c = (a + b) & 1;
  const int na = 1 - a, nb = 1 - b;
  const int step = a == 0 ? 2 : -2;
  std::array<GnVertex, 5> out = {
      GnVertex{na, nb, j},
      GnVertex{a, nb, j},
      GnVertex{a, c, j - 1},
      GnVertex{a, c, j + 1},
      GnVertex{na, b, j + step},
  };
  for (auto& u : out) u = gn_normalize(u, n);
  for (int x = 0; x < 5; ++x) {
    for (int y = x + 1; y < 5; ++y) {
      if (out[x] == out[y]) throw std::logic_error("G_n neighborhood has repeated vertices");
    }
  }
  return out;
}

Graph build_gn(int n) {
  require_gn(n);
  const int order = 8 * n;
  GraphBuilder b(order);
  std::vector<std::string> labels(order);
  for (int idx = 0; idx < order; ++idx) {
    const GnVertex v = gn_vertex(idx, n);
    labels[idx] = gn_label(v, n);
    for (const GnVertex& u : gn_neighbors(v, n)) {
      // Every listed neighbor must list v back.
      const auto back = gn_neighbors(u, n);
      if (std::find(back.begin(), back.end(), v) == back.end()) {
        throw std::logic_error("G_n neighborhood rule is not symmetric at " + gn_label(v, n) +
                               " -> " + gn_label(u, n));
      }
      b.add_edge(idx, gn_index(u, n));
    }
  }
  b.set_labels(std::move(labels));
  Graph g = b.build();
  if (!is_regular(g, 5)) throw std::logic_error("G_n is not 5-regular");
  return g;
}

std::vector<std::vector<int>> kneser_subsets(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int x = next; x <= n; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

Graph build_kneser(int n, int r) {
  if (r < 1 || n < 2 * r) {
    throw GraphError("K(n,r) requires r >= 1 and n >= 2r, got n=" + std::to_string(n) +
                     " r=" + std::to_string(r));
  }
  const auto subsets = kneser_subsets(n, r);
  if (static_cast<int>(subsets.size()) > kMaxOrder) throw GraphError("K(n,r) exceeds 128 vertices");
  const int order = static_cast<int>(subsets.size());
  GraphBuilder b(order);
  std::vector<std::string> labels;
  std::vector<uint32_t> masks;
  for (const auto& s : subsets) {
    uint32_t m = 0;
    std::string label = "{";
    for (size_t i = 0; i < s.size(); ++i) {
      m |= 1u << s[i];
      label += (i ? "," : "") + std::to_string(s[i]);
    }
    masks.push_back(m);
    labels.push_back(label + "}");
  }
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) {
      if ((masks[u] & masks[v]) == 0) b.add_edge(u, v);
    }
  }
  b.set_labels(std::move(labels));
  return b.build();
}

int kneser_index(int n, std::vector<int> subset) {
  std::sort(subset.begin(), subset.end());
  const auto subsets = kneser_subsets(n, static_cast<int>(subset.size()));
  auto it = std::find(subsets.begin(), subsets.end(), subset);
  if (it == subsets.end()) throw GraphError("not a subset of {1.." + std::to_string(n) + "}");
  return static_cast<int>(it - subsets.begin());
}

Graph build_generalized_petersen(int n, int k) {
  if (n < 3 || k < 1 || 2 * k >= n) {
    throw GraphError("GP(n,k) requires n >= 3 and 1 <= k < n/2, got n=" + std::to_string(n) +
                     " k=" + std::to_string(k));
  }
  if (2 * n > kMaxOrder) throw GraphError("GP(n,k) exceeds 128 vertices");
  GraphBuilder b(2 * n);
  std::vector<std::string> labels(2 * n);
  for (int i = 0; i < n; ++i) {
    b.add_edge(i, (i + 1) % n);
    b.add_edge(i, n + i);
    b.add_edge(n + i, n + (i + k) % n);
    labels[i] = "u" + std::to_string(i);
    labels[n + i] = "v" + std::to_string(i);
  }
  b.set_labels(std::move(labels));
  return b.build();
}

std::string to_string(NamedGraph which) {
  switch (which) {
    case NamedGraph::kHeawood: return "heawood";
    case NamedGraph::kCoxeter: return "coxeter";
    case NamedGraph::kDyck: return "dyck";
  }
  return "unknown";
}

namespace {

void self_check(const Graph& g, const std::string& name, int order, int degree, int expected_girth) {
  if (g.order() != order || !is_regular(g, degree) || girth(g) != expected_girth) {
    throw std::logic_error(name + " construction failed its order/regularity/girth check");
  }
}

Graph heawood() {
  GraphBuilder b(14);
  std::vector<std::string> labels(14);
  for (int i = 0; i < 7; ++i) {
    labels[i] = "p" + std::to_string(i);
    labels[7 + i] = "L" + std::to_string(i);
    for (int off : {0, 1, 3}) b.add_edge((i + off) % 7, 7 + i);
  }
  b.set_labels(std::move(labels));
  Graph g = b.build();
  self_check(g, "heawood", 14, 3, 6);
  return g;
}

Graph coxeter() {
  // z_i = i, a_i = 7 + i, b_i = 14 + i, c_i = 21 + i.
  GraphBuilder b(28);
  std::vector<std::string> labels(28);
  const char* names = "zabc";
  for (int i = 0; i < 7; ++i) {
    for (int block = 0; block < 4; ++block) {
      labels[7 * block + i] = std::string(1, names[block]) + std::to_string(i);
    }
    for (int block = 1; block <= 3; ++block) {
      b.add_edge(i, 7 * block + i);
      b.add_edge(7 * block + i, 7 * block + (i + block) % 7);
    }
  }
  b.set_labels(std::move(labels));
  Graph g = b.build();
  self_check(g, "coxeter", 28, 3, 7);
  return g;
}

Graph dyck() {
  constexpr int kOrder = 32;
  constexpr int kLcf[4] = {5, -5, 13, -13};
  GraphBuilder b(kOrder);
  for (int i = 0; i < kOrder; ++i) {
    b.add_edge(i, (i + 1) % kOrder);
    b.set_edge(i, mod(i + kLcf[i % 4], kOrder), true);
  }
  Graph g = b.build();
  self_check(g, "dyck", 32, 3, 6);
  if (!is_bipartite(g)) throw std::logic_error("dyck construction is not bipartite");
  return g;
}

}  // namespace

Graph build_named(NamedGraph which) {
  switch (which) {
    case NamedGraph::kHeawood: return heawood();
    case NamedGraph::kCoxeter: return coxeter();
    case NamedGraph::kDyck: return dyck();
  }
  throw GraphError("unknown named graph");
}

Graph build_hypercube_diag(int d) {
  if (d < 2 || d > 7) throw GraphError("Q^d_d requires 2 <= d <= 7, got " + std::to_string(d));
  const int order = 1 << d;
  GraphBuilder b(order);
  std::vector<std::string> labels(order);
  for (int x = 0; x < order; ++x) {
    for (int bit = d - 1; bit >= 0; --bit) labels[x].push_back(((x >> bit) & 1) ? '1' : '0');
    for (int y = x + 1; y < order; ++y) {
      const int dist = std::popcount(static_cast<unsigned>(x ^ y));
      if (dist == 1 || dist == d) b.add_edge(x, y);
    }
  }
  b.set_labels(std::move(labels));
  return b.build();
}

std::vector<F16> f16_cubic_residues() {
  std::vector<uint8_t> bits;
  for (int x = 1; x < 16; ++x) bits.push_back(F16(static_cast<uint8_t>(x)).pow(3).bits());
  std::sort(bits.begin(), bits.end());
  bits.erase(std::unique(bits.begin(), bits.end()), bits.end());
  std::vector<F16> out;
  for (uint8_t b : bits) out.emplace_back(b);
  return out;
}

Graph build_raty() {
  const F16 one(1);
  const F16 a = F16::alpha();
  const F16 a2 = a.pow(2), a3 = a.pow(3);
  std::vector<uint8_t> expected = {one.bits(), a3.bits(), (a3 + a).bits(), (a3 + a2).bits(),
                                   (a3 + a2 + a + one).bits()};
  std::sort(expected.begin(), expected.end());
  std::vector<uint8_t> computed;
  for (F16 x : f16_cubic_residues()) computed.push_back(x.bits());
  if (computed != expected) throw std::logic_error("F16 cubic residue set does not match");

  GraphBuilder b(16);
  std::vector<std::string> labels(16);
  for (int x = 0; x < 16; ++x) {
    for (int bit = 3; bit >= 0; --bit) labels[x].push_back(((x >> bit) & 1) ? '1' : '0');
    for (int y = x + 1; y < 16; ++y) {
      if (std::binary_search(computed.begin(), computed.end(), static_cast<uint8_t>(x ^ y))) {
        b.add_edge(x, y);
      }
    }
  }
  b.set_labels(std::move(labels));
  return b.build();
}

Graph disjoint_union(const Graph& g, int k) {
  if (k < 1) throw GraphError("disjoint_union requires k >= 1");
  if (k * g.order() > kMaxOrder) throw GraphError("disjoint_union exceeds 128 vertices");
  if (k == 1) return g;
  const int n = g.order();
  GraphBuilder b(k * n);
  std::vector<std::string> labels;
  for (int c = 0; c < k; ++c) {
    for (auto [u, v] : g.edges()) b.add_edge(c * n + u, c * n + v);
    for (int v = 0; v < n; ++v) labels.push_back(std::to_string(c) + ":" + g.label(v));
  }
  b.set_labels(std::move(labels));
  return b.build();
}

Graph build_path(int m) {
  GraphBuilder b(m);
  for (int i = 0; i + 1 < m; ++i) b.add_edge(i, i + 1);
  return b.build();
}

Graph build_cycle(int m) {
  if (m < 3) throw GraphError("cycle requires at least 3 vertices");
  GraphBuilder b(m);
  for (int i = 0; i < m; ++i) b.add_edge(i, (i + 1) % m);
  return b.build();
}

Graph build_complete(int m) {
  GraphBuilder b(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) b.add_edge(i, j);
  }
  return b.build();
}

int girth(const Graph& g) {
  int best = -1;
  for (Vertex s = 0; s < g.order(); ++s) {
    std::vector<int> dist(g.order(), -1), parent(g.order(), -1);
    std::deque<Vertex> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      g.neighbors(u).for_each([&](Vertex w) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          const int len = dist[u] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      });
    }
  }
  return best;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      bool ok = true;
      g.neighbors(u).for_each([&](Vertex w) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

bool is_regular(const Graph& g, int degree) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != degree) return false;
  }
  return true;
}

}  // namespace pathsat
