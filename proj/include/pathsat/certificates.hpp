#pragma once

#include <string>
#include <vector>

#include "pathsat/constructions.hpp"
#include "pathsat/graph.hpp"
#include "pathsat/saturation.hpp"

namespace pathsat {

// The (3n-1)-vertex set
//   {(00,2i),(01,2i) : i < n} ∪ {(01,4i+1),(00,4i+3) : 0 <= i <= ⌈n/2⌉-2} ∪ S
// with S = {(01,2n-3)} for even n and empty for odd n.
struct CanonicalPathSpec {
  int n = 2;
  std::vector<GnVertex> parity_pad;  // S

  static CanonicalPathSpec for_n(int n);
  std::vector<GnVertex> vertex_set() const;
};

// Orders a vertex set whose induced subgraph is a path, starting from the
// lower-indexed end. Throws GraphError if the induced subgraph is not a path.
PathCertificate order_as_path(const Graph& g, std::vector<Vertex> vertices);

// Throws std::logic_error if the set does not induce a path in build_gn(n).
PathCertificate canonical_long_path(int n);

// The two deleted edges {(00,0), w} every edge of G_n reduces to.
enum class DeletionCase { kW01Zero, kW00Last };  // w = (01,0), w = (00,2n-1)

GnVertex deletion_endpoint(int n, DeletionCase c);
std::string to_string(DeletionCase c);

// A perturbation of a base graph together with an induced P_k claimed in the
// perturbed graph.
struct Fixture {
  std::string scenario;
  VertexPair pair{};
  Perturbation kind = Perturbation::kEdgeDeleted;
  PathCertificate path;
};

Graph perturbed(const Graph& base, const Fixture& f);
bool validates(const Graph& base, const Fixture& f);

// canonical_long_path(n) modified for G_n - {(00,0), w}: for even n add
// (00,2n-1); for odd n add (00,2n-1) and (11,0) (w = (01,0)) or (11,2n-1)
// (w = (00,2n-1)), then drop (01,2n-2). Throws std::logic_error if the
// result does not validate.
Fixture deletion_fixture(int n, DeletionCase c);

// Two induced P_6 fixtures in K(n,2): deleting {2,3}-{4,5} and adding
// {1,2}-{1,3}. Requires n >= 5; validated before return.
std::vector<Fixture> kneser_p6_fixtures(int n);

}  // namespace pathsat
