#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pathsat/graph.hpp"

namespace pathsat {

// Vertex (ab, j) of G_n: a, b in Z_2 and j in Z_{2n}.
//
// Canonical index is (2a + b) * 2n + j, so each (a,b) row occupies a
// contiguous block of 2n indices. Certificates printed as indices are portable
// under this layout.
struct GnVertex {
  int a = 0;
  int b = 0;
  int j = 0;

  bool operator==(const GnVertex&) const = default;
};

// Reduces j into 0..2n-1 with true mathematical mod (negative j allowed).
GnVertex gn_normalize(GnVertex v, int n);
int gn_index(GnVertex v, int n);
GnVertex gn_vertex(int index, int n);
// "(ab,j)" with j already normalized.
std::string gn_label(GnVertex v, int n);

// The five neighbors of (ab,j) in G_n, c = a + b:
//   (ā b̄, j), (a b̄, j), (a c, j-1), (a c, j+1), (ā b, j + 2(-1)^a).
// Throws GraphError if n < 2.
std::array<GnVertex, 5> gn_neighbors(GnVertex v, int n);

// G_n on 8n vertices (5-regular). Throws GraphError for n < 2, or
// std::logic_error if the neighborhood rule turns out asymmetric.
Graph build_gn(int n);

// Kneser graph K(n, r): r-subsets of {1..n} in lexicographic order, adjacent
// when disjoint. Throws GraphError unless n >= 2r, r >= 1.
Graph build_kneser(int n, int r = 2);
std::vector<std::vector<int>> kneser_subsets(int n, int r);
// Index of an r-subset (elements 1-based, any order) in build_kneser(n, r).
int kneser_index(int n, std::vector<int> subset);

// Outer cycle u_i = i, spokes u_i - v_i, inner v_i - v_{i+k}, with v_i = n + i.
// Requires n >= 3 and 1 <= k < n/2.
Graph build_generalized_petersen(int n, int k);

enum class NamedGraph { kHeawood, kCoxeter, kDyck };

// Heawood: Fano plane incidence graph (points i, lines {i, i+1, i+3} mod 7).
// Coxeter: 7 hubs z_i joined to a_i, b_i, c_i; 7-cycles a_i~a_{i+1},
//          b_i~b_{i+2}, c_i~c_{i+3}.
// Dyck: LCF [5,-5,13,-13]^8.
// Each construction self-checks order, cubicity, girth (and bipartiteness
// for Dyck) and throws std::logic_error on mismatch.
Graph build_named(NamedGraph which);
std::string to_string(NamedGraph which);

// Q_d plus antipodal diagonals; 2 <= d <= 7.
Graph build_hypercube_diag(int d);

// Element of F_16 = F_2[α]/(α^4 + α + 1), bit i = coefficient of α^i.
class F16 {
 public:
  constexpr F16() = default;
  constexpr explicit F16(uint8_t bits) : bits_(bits & 0xF) {}

  static constexpr F16 alpha() { return F16(0b0010); }

  constexpr uint8_t bits() const { return bits_; }
  friend constexpr F16 operator+(F16 x, F16 y) { return F16(x.bits_ ^ y.bits_); }
  friend constexpr F16 operator*(F16 x, F16 y) {
    unsigned acc = 0;
    for (int i = 0; i < 4; ++i) {
      if ((y.bits_ >> i) & 1u) acc ^= static_cast<unsigned>(x.bits_) << i;
    }
    for (int i = 6; i >= 4; --i) {
      if ((acc >> i) & 1u) acc ^= 0b10011u << (i - 4);
    }
    return F16(static_cast<uint8_t>(acc));
  }
  constexpr F16 pow(int e) const {
    F16 r(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }
  constexpr bool operator==(const F16&) const = default;

 private:
  uint8_t bits_ = 0;
};

// The cubes of the nonzero elements, ascending by bit pattern.
std::vector<F16> f16_cubic_residues();

// Vertices are F_16 elements (index = bit pattern); ab is an edge iff a + b
// is a nonzero cube. Throws std::logic_error if the computed cube set differs
// from {1, α³, α³+α, α³+α², α³+α²+α+1}.
Graph build_raty();

// k block-indexed copies of g; copy c holds vertices c*order .. c*order+order-1.
Graph disjoint_union(const Graph& g, int k);

Graph build_path(int m);
Graph build_cycle(int m);
Graph build_complete(int m);

// Length of a shortest cycle, or -1 for forests.
int girth(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_regular(const Graph& g, int degree);

}  // namespace pathsat
