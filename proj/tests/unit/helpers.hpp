#pragma once

#include <random>

#include "pathsat/constructions.hpp"
#include "pathsat/graph.hpp"
#include "pathsat/permutation.hpp"

namespace pathsat::testing {

inline Graph random_graph(int order, double density, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  GraphBuilder b(order);
  for (Vertex u = 0; u < order; ++u) {
    for (Vertex v = u + 1; v < order; ++v) {
      if (coin(rng)) b.add_edge(u, v);
    }
  }
  return b.build();
}

// adj_g(u,v) <=> adj_h(pi(u), pi(v)) for all pairs, checked directly.
inline bool preserves_adjacency(const Graph& g, const Graph& h, const VertexPermutation& pi) {
  if (g.order() != h.order() || pi.size() != g.order()) return false;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v) != h.adjacent(pi(u), pi(v))) return false;
    }
  }
  return true;
}

inline Vertex gn(int a, int b, int j, int n) { return gn_index({a, b, j}, n); }

}  // namespace pathsat::testing
