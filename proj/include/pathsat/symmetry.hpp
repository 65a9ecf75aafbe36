#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathsat/constructions.hpp"
#include "pathsat/graph.hpp"
#include "pathsat/permutation.hpp"

namespace pathsat {

class SymmetryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The G_n maps, as permutations of canonical indices.
//   f(ab,j)   = (ab, j+1)
//   p(ab,j)   = (ā b, -j-1) for even j, (ā b̄, -j-1) for odd j
//   p⁻¹(ab,j) = (ā b̄, -j-1) for even j, (ā b, -j-1) for odd j
//   q(ab,j)   = (a c, -j+2a), c = a+b
VertexPermutation auto_f(int n);
VertexPermutation auto_p(int n);
VertexPermutation auto_p_inv(int n);
VertexPermutation auto_q(int n);

// r = q on A = T_0 ∪ T_1, T_j = {(00,j),(01,j),(10,j+1),(11,j+1)}, and
// f²∘p⁻¹ elsewhere. Throws SymmetryError unless r(00,0) = (00,0) and
// r(11,0) = (00,1).
VertexPermutation auto_r(int n);

// True iff adjacency is preserved both ways. Throws GraphError when the
// permutation size differs from the graph order.
bool verify_automorphism(const Graph& g, const VertexPermutation& pi);

// One factor of a composite: generator name raised to a nonzero power.
struct WordFactor {
  std::string generator;
  int exponent = 1;

  bool operator==(const WordFactor&) const = default;
};

// An automorphism stored both as a word and as its evaluated permutation. The
// word reads as a composition: [f^3, p^-1] means f³∘p⁻¹, so p⁻¹ acts first.
struct Composite {
  std::vector<WordFactor> word;
  VertexPermutation perm;

  // "id" for the empty word, otherwise e.g. "f^3∘p^-1".
  std::string to_string() const;
};

// Appends factor on the right (acting first), merging with an equal neighbor.
void append_factor(std::vector<WordFactor>& word, WordFactor factor);

struct NamedPermutation {
  std::string name;
  VertexPermutation perm;
};

// A list of automorphisms, each checked against its graph on construction.
class GeneratorSet {
 public:
  // Throws SymmetryError naming the first member that is not an automorphism.
  static GeneratorSet verified(const Graph& g, std::vector<NamedPermutation> gens);

  const std::vector<NamedPermutation>& generators() const { return gens_; }
  bool empty() const { return gens_.empty(); }
  int size() const { return static_cast<int>(gens_.size()); }
  std::vector<std::string> names() const;

  // True if this set was verified against a graph with this adjacency.
  bool verified_for(const Graph& g) const { return fingerprint_ == g.fingerprint() && order_ == g.order(); }

 private:
  GeneratorSet() = default;
  std::vector<NamedPermutation> gens_;
  uint64_t fingerprint_ = 0;
  int order_ = 0;
};

// {f, p, q, r} for build_gn(n).
GeneratorSet gn_generators(int n);
// Symmetric-group action on K(n,r): the transposition (1 2) and the cycle
// (1 2 ... n), acting on subsets.
GeneratorSet kneser_generators(int n, int r = 2);
// Generators of `base` acting on every copy of disjoint_union(base, k), plus
// the block swap (copy 0 <-> copy 1) and the block rotation.
GeneratorSet union_generators(const Graph& base, const GeneratorSet& base_gens, int k);

enum class OrbitDomain { kVertices, kEdges, kNonEdges };

std::string to_string(OrbitDomain d);

// Partition of a domain into orbits. Elements are listed ascending; vertices
// are stored as the degenerate pair {v, v}.
struct OrbitPartition {
  OrbitDomain domain = OrbitDomain::kVertices;
  int graph_order = 0;
  std::vector<VertexPair> elements;
  std::vector<int> class_of;         // per element
  std::vector<int> representatives;  // least element index of each class, ascending

  int class_count() const { return static_cast<int>(representatives.size()); }
  std::vector<int> members(int cls) const;
  // Element index of a vertex or pair, -1 if not in the domain.
  int index_of(VertexPair e) const;
};

// Union-find closure of the domain under the generators. Throws SymmetryError
// if gens was not verified against g.
OrbitPartition orbits(const Graph& g, const GeneratorSet& gens, OrbitDomain domain);

// For every element, a generator word carrying its class representative to
// it. Words are read as compositions of generator names (see Composite).
std::vector<Composite> transport_words(const OrbitPartition& part, const GeneratorSet& gens);

// An explicit {f, p, p⁻¹} composite mapping v to v2, routed through (00,0)
// with the maps f^j, f^j∘p∘p, f^{j+1}∘p, f^{j+1}∘p⁻¹. Verified before return.
Composite transitivity_witness(int n, GnVertex v, GnVertex v2);

// The four neighbors of (00,0) other than (01,0): (11,0), (00,1), (10,2),
// (00,2n-1).
std::vector<GnVertex> arc_neighbors(int n);

// A {q, r} composite fixing (00,0) and mapping w to w2. Throws SymmetryError
// if w or w2 is not in arc_neighbors(n).
Composite neighbor_witness(int n, GnVertex w, GnVertex w2);

struct GnPartition {
  VertexSet upper;        // U_n
  VertexSet lower;        // L_n
  VertexSet closed_root;  // N[(00,0)]
};

// U_n = ({a = 0} \ {(01,2n-1)}) \ N[(00,0)], L_n = V \ (U_n ∪ N[(00,0)]).
GnPartition gn_partition(int n);

// r(U_n) ⊆ L_n.
bool check_r_range(int n);

}  // namespace pathsat
