#include <algorithm>
#include <string>

#include "pathsat/permutation.hpp"

namespace pathsat {

VertexPermutation VertexPermutation::identity(int size) {
  VertexPermutation p;
  p.image_.resize(size);
  for (int i = 0; i < size; ++i) p.image_[i] = i;
  return p;
}

VertexPermutation::VertexPermutation(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<char> hit(image_.size(), 0);
  for (Vertex v : image_) {
    if (v < 0 || v >= size() || hit[v]) {
      throw GraphError("not a permutation of 0.." + std::to_string(size() - 1));
    }
    hit[v] = 1;
  }
}

VertexPermutation VertexPermutation::inverse() const {
  VertexPermutation out;
  out.image_.resize(image_.size());
  for (int i = 0; i < size(); ++i) out.image_[image_[i]] = i;
  return out;
}

VertexPermutation VertexPermutation::power(int k) const {
  if (k < 0) return inverse().power(-k);
  VertexPermutation result = identity(size());
  for (int i = 0; i < k; ++i) result = compose(*this, result);
  return result;
}

bool VertexPermutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

VertexPermutation compose(const VertexPermutation& outer, const VertexPermutation& inner) {
  if (outer.size() != inner.size()) throw GraphError("composing permutations of different sizes");
  std::vector<Vertex> image(inner.size());
  for (int i = 0; i < inner.size(); ++i) image[i] = outer(inner(i));
  return VertexPermutation(std::move(image));
}

PathCertificate apply(const VertexPermutation& p, std::span<const Vertex> path) {
  PathCertificate out;
  out.reserve(path.size());
  for (Vertex v : path) out.push_back(p(v));
  return out;
}

}  // namespace pathsat
