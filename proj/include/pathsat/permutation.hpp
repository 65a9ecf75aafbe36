#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pathsat/graph.hpp"

namespace pathsat {

// Bijection on 0..size-1. The constructor rejects anything that is not a
// bijection, so every instance is a valid permutation.
class VertexPermutation {
 public:
  static VertexPermutation identity(int size);

  // Throws GraphError if image is not a permutation of 0..image.size()-1.
  explicit VertexPermutation(std::vector<Vertex> image);

  int size() const { return static_cast<int>(image_.size()); }
  Vertex operator()(Vertex v) const { return image_[v]; }
  std::span<const Vertex> image() const { return image_; }

  VertexPermutation inverse() const;
  // k-fold self-composition; negative k uses the inverse.
  VertexPermutation power(int k) const;
  bool is_identity() const;

  bool operator==(const VertexPermutation&) const = default;

 private:
  VertexPermutation() = default;
  std::vector<Vertex> image_;
};

// (outer ∘ inner)(v) = outer(inner(v)).
VertexPermutation compose(const VertexPermutation& outer, const VertexPermutation& inner);

// Image of a pair under a permutation, normalized so first < second.
inline VertexPair apply(const VertexPermutation& p, VertexPair e) {
  Vertex a = p(e.first), b = p(e.second);
  return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

PathCertificate apply(const VertexPermutation& p, std::span<const Vertex> path);

// Bound for are_isomorphic(); the backtracking search is only intended for
// the small fixtures in this project.
inline constexpr int kMaxIsomorphismOrder = 36;

// Returns pi with adj_g(u,v) <=> adj_h(pi(u),pi(v)) for all u,v, or nullopt.
// Throws GraphError if either order exceeds kMaxIsomorphismOrder.
std::optional<VertexPermutation> are_isomorphic(const Graph& g, const Graph& h);

// Same search without the order bound, with optional prescribed images
// (forced[i] = {vertex of g, vertex of h}).
std::optional<VertexPermutation> find_isomorphism(const Graph& g, const Graph& h,
                                                  std::span<const VertexPair> forced = {});

}  // namespace pathsat
