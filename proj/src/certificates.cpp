#include "pathsat/certificates.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathsat {

CanonicalPathSpec CanonicalPathSpec::for_n(int n) {
  if (n < 2) throw GraphError("canonical path requires n >= 2");
  CanonicalPathSpec spec;
  spec.n = n;
  if (n % 2 == 0) spec.parity_pad.push_back({0, 1, 2 * n - 3});
  return spec;
}

std::vector<GnVertex> CanonicalPathSpec::vertex_set() const {
  std::vector<GnVertex> out;
  for (int i = 0; i < n; ++i) {
    out.push_back({0, 0, 2 * i});
    out.push_back({0, 1, 2 * i});
  }
  const int upper = (n + 1) / 2 - 2;
  for (int i = 0; i <= upper; ++i) {
    out.push_back({0, 1, 4 * i + 1});
    out.push_back({0, 0, 4 * i + 3});
  }
  out.insert(out.end(), parity_pad.begin(), parity_pad.end());
  return out;
}

PathCertificate order_as_path(const Graph& g, std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (vertices.empty()) throw GraphError("empty vertex set");
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw GraphError("vertex set has duplicates");
  }
  VertexSet set;
  for (Vertex v : vertices) {
    if (v < 0 || v >= g.order()) throw GraphError("vertex out of range");
    set.insert(v);
  }
  if (vertices.size() == 1) return vertices;

  int ends = 0;
  Vertex start = -1;
  for (Vertex v : vertices) {
    const int d = (g.neighbors(v) & set).size();
    if (d == 1) {
      ++ends;
      if (start < 0) start = v;
    } else if (d != 2) {
      throw GraphError("induced subgraph has a vertex of degree " + std::to_string(d));
    }
  }
  if (ends != 2) throw GraphError("induced subgraph is not a path");

  PathCertificate path{start};
  VertexSet seen;
  seen.insert(start);
  while (true) {
    const VertexSet next = (g.neighbors(path.back()) & set) - seen;
    if (next.empty()) break;
    path.push_back(next.first());
    seen.insert(next.first());
  }
  // A path plus disjoint cycles has the same degree profile.
  if (path.size() != vertices.size()) throw GraphError("induced subgraph is disconnected");
  return path;
}

PathCertificate canonical_long_path(int n) {
  const Graph g = build_gn(n);
  std::vector<Vertex> vertices;
  for (const GnVertex& v : CanonicalPathSpec::for_n(n).vertex_set()) vertices.push_back(gn_index(v, n));
  try {
    PathCertificate path = order_as_path(g, vertices);
    if (static_cast<int>(path.size()) != 3 * n - 1) throw GraphError("wrong size");
    return path;
  } catch (const GraphError& e) {
    throw std::logic_error("canonical vertex set does not induce P_{3n-1} in G_" + std::to_string(n) + ": " +
                           e.what());
  }
}

GnVertex deletion_endpoint(int n, DeletionCase c) {
  return c == DeletionCase::kW01Zero ? GnVertex{0, 1, 0} : GnVertex{0, 0, 2 * n - 1};
}

std::string to_string(DeletionCase c) { return c == DeletionCase::kW01Zero ? "w=(01,0)" : "w=(00,2n-1)"; }

Graph perturbed(const Graph& base, const Fixture& f) {
  return toggle_edge(base, f.pair.first, f.pair.second, f.kind == Perturbation::kNonEdgeAdded);
}

bool validates(const Graph& base, const Fixture& f) {
  const bool present = base.adjacent(f.pair.first, f.pair.second);
  if (present != (f.kind == Perturbation::kEdgeDeleted)) return false;
  return is_induced_path(perturbed(base, f), f.path);
}

Fixture deletion_fixture(int n, DeletionCase c) {
  const Graph g = build_gn(n);
  const int m = 2 * n;
  const Vertex root = gn_index({0, 0, 0}, n);
  const Vertex w = gn_index(deletion_endpoint(n, c), n);

  std::vector<Vertex> vertices;
  for (const GnVertex& v : CanonicalPathSpec::for_n(n).vertex_set()) vertices.push_back(gn_index(v, n));
  vertices.push_back(gn_index({0, 0, m - 1}, n));
  if (n % 2 == 1) {
    vertices.push_back(gn_index(c == DeletionCase::kW01Zero ? GnVertex{1, 1, 0} : GnVertex{1, 1, m - 1}, n));
    std::erase(vertices, gn_index({0, 1, m - 2}, n));
  }

  Fixture f;
  f.scenario = "gn" + std::to_string(n) + " delete (00,0)-" + gn_label(deletion_endpoint(n, c), n);
  f.pair = {std::min(root, w), std::max(root, w)};
  f.kind = Perturbation::kEdgeDeleted;
  try {
    f.path = order_as_path(perturbed(g, f), vertices);
  } catch (const GraphError& e) {
    throw std::logic_error("deletion fixture for n=" + std::to_string(n) + " " + to_string(c) +
                           " is not a path: " + e.what());
  }
  if (static_cast<int>(f.path.size()) != 3 * n || !validates(g, f)) {
    throw std::logic_error("deletion fixture for n=" + std::to_string(n) + " failed validation");
  }
  return f;
}

std::vector<Fixture> kneser_p6_fixtures(int n) {
  if (n < 5) throw GraphError("Kneser fixtures require n >= 5");
  const Graph g = build_kneser(n);
  auto idx = [n](int x, int y) { return kneser_index(n, {x, y}); };
  auto pair = [](Vertex a, Vertex b) { return VertexPair{std::min(a, b), std::max(a, b)}; };

  Fixture del;
  del.scenario = "kneser" + std::to_string(n) + " delete {2,3}-{4,5}";
  del.pair = pair(idx(2, 3), idx(4, 5));
  del.kind = Perturbation::kEdgeDeleted;
  del.path = {idx(4, 5), idx(1, 2), idx(3, 4), idx(1, 5), idx(2, 3), idx(1, 4)};

  Fixture add;
  add.scenario = "kneser" + std::to_string(n) + " add {1,2}-{1,3}";
  add.pair = pair(idx(1, 2), idx(1, 3));
  add.kind = Perturbation::kNonEdgeAdded;
  add.path = {idx(1, 3), idx(1, 2), idx(3, 4), idx(1, 5), idx(2, 3), idx(1, 4)};

  for (const Fixture& f : {del, add}) {
    if (!validates(g, f)) throw std::logic_error("Kneser fixture failed: " + f.scenario);
  }
  return {del, add};
}

}  // namespace pathsat
