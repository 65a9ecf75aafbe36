#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <iterator>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pathsat {

inline constexpr int kMaxOrder = 128;

using Vertex = int;
using VertexPair = std::pair<Vertex, Vertex>;

// An ordered vertex list claimed to induce a path. Validity is decided by
// check_induced_path(), never assumed.
using PathCertificate = std::vector<Vertex>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Fixed 128-bit vertex set. Bits at positions >= the owning graph's order are
// never set by Graph operations.
class VertexSet {
 public:
  constexpr VertexSet() = default;

  static constexpr VertexSet first_n(int n) {
    VertexSet s;
    if (n >= 64) {
      s.words_[0] = ~uint64_t{0};
      s.words_[1] = n >= 128 ? ~uint64_t{0} : (uint64_t{1} << (n - 64)) - 1;
    } else {
      s.words_[0] = n <= 0 ? 0 : (uint64_t{1} << n) - 1;
    }
    return s;
  }

  static VertexSet of(std::span<const Vertex> vs) {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  constexpr bool contains(Vertex v) const {
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }
  constexpr void insert(Vertex v) { words_[v >> 6] |= uint64_t{1} << (v & 63); }
  constexpr void erase(Vertex v) { words_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }

  constexpr int size() const {
    return std::popcount(words_[0]) + std::popcount(words_[1]);
  }
  constexpr bool empty() const { return (words_[0] | words_[1]) == 0; }

  // Least member, or -1 when empty.
  constexpr Vertex first() const {
    if (words_[0]) return std::countr_zero(words_[0]);
    if (words_[1]) return 64 + std::countr_zero(words_[1]);
    return -1;
  }

  constexpr VertexSet operator&(const VertexSet& o) const {
    return VertexSet(words_[0] & o.words_[0], words_[1] & o.words_[1]);
  }
  constexpr VertexSet operator|(const VertexSet& o) const {
    return VertexSet(words_[0] | o.words_[0], words_[1] | o.words_[1]);
  }
  constexpr VertexSet operator^(const VertexSet& o) const {
    return VertexSet(words_[0] ^ o.words_[0], words_[1] ^ o.words_[1]);
  }
  // Set difference.
  constexpr VertexSet operator-(const VertexSet& o) const {
    return VertexSet(words_[0] & ~o.words_[0], words_[1] & ~o.words_[1]);
  }
  constexpr VertexSet& operator&=(const VertexSet& o) { return *this = *this & o; }
  constexpr VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }
  constexpr VertexSet& operator-=(const VertexSet& o) { return *this = *this - o; }
  constexpr bool operator==(const VertexSet&) const = default;

  // Visits members in ascending order.
  template <class F>
  constexpr void for_each(F&& f) const {
    for (int w = 0; w < 2; ++w) {
      uint64_t bits = words_[w];
      while (bits) {
        f(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  constexpr uint64_t word(int i) const { return words_[i]; }

 private:
  constexpr VertexSet(uint64_t lo, uint64_t hi) : words_{lo, hi} {}
  std::array<uint64_t, 2> words_{};
};

class GraphBuilder;

// Dense undirected simple graph on at most kMaxOrder vertices. Immutable once
// built; perturbations return copies.
class Graph {
 public:
  // Edgeless graph. Throws GraphError unless 1 <= order <= kMaxOrder.
  explicit Graph(int order);

  int order() const { return order_; }
  VertexSet vertices() const { return VertexSet::first_n(order_); }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
  int degree(Vertex v) const { return rows_[v].size(); }
  int edge_count() const;

  // Edges as (u < v) pairs in ascending lexicographic order.
  std::vector<VertexPair> edges() const;

  bool has_labels() const { return labels_ != nullptr; }
  // Display label; falls back to the decimal index.
  std::string label(Vertex v) const;
  Graph with_labels(std::vector<std::string> labels) const;

  // Returns a copy with {u,v} present or absent. Throws on u == v or on an
  // out-of-range index.
  Graph with_edge(Vertex u, Vertex v, bool present) const;

  // Order-sensitive hash of the adjacency structure (labels ignored).
  uint64_t fingerprint() const;

  bool operator==(const Graph& o) const;

 private:
  friend class GraphBuilder;
  void check_vertex(Vertex v) const;

  int order_ = 0;
  std::array<VertexSet, kMaxOrder> rows_{};
  std::shared_ptr<const std::vector<std::string>> labels_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int order) : graph_(order) {}
  explicit GraphBuilder(const Graph& g) : graph_(g) {}

  GraphBuilder& add_edge(Vertex u, Vertex v) { return set_edge(u, v, true); }
  GraphBuilder& set_edge(Vertex u, Vertex v, bool present);
  GraphBuilder& set_labels(std::vector<std::string> labels);

  int order() const { return graph_.order(); }
  bool adjacent(Vertex u, Vertex v) const { return graph_.adjacent(u, v); }
  Graph build() const { return graph_; }

 private:
  Graph graph_;
};

Graph new_graph(int order);

inline Graph toggle_edge(const Graph& g, Vertex u, Vertex v, bool present) {
  return g.with_edge(u, v, present);
}

// Machine-readable outcome of certificate validation.
enum class PathCheck {
  kOk,
  kEmpty,
  kOutOfRange,
  kDuplicate,
  kMissingEdge,  // consecutive entries not adjacent
  kChord,        // non-consecutive entries adjacent
};

std::string_view to_string(PathCheck reason);

struct PathValidation {
  PathCheck reason = PathCheck::kOk;
  // Offending positions in the certificate, -1 when not applicable.
  int first = -1;
  int second = -1;

  explicit operator bool() const { return reason == PathCheck::kOk; }
};

PathValidation check_induced_path(const Graph& g, std::span<const Vertex> path);

inline bool is_induced_path(const Graph& g, std::span<const Vertex> path) {
  return static_cast<bool>(check_induced_path(g, path));
}

// Forward range over the non-edges {u,v}, u < v, in ascending lexicographic
// order. The graph must outlive the range.
class NonEdgeRange {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = VertexPair;
    using difference_type = std::ptrdiff_t;
    using pointer = const VertexPair*;
    using reference = const VertexPair&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++() {
      advance();
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      advance();
      return tmp;
    }
    bool operator==(const iterator& o) const { return current_ == o.current_; }

   private:
    friend class NonEdgeRange;
    iterator(const Graph* g, VertexPair start) : g_(g), current_(start) {
      if (current_.first >= 0 && !valid()) advance();
    }
    bool valid() const {
      return current_.second < g_->order() &&
             !g_->adjacent(current_.first, current_.second);
    }
    void advance();

    const Graph* g_ = nullptr;
    VertexPair current_{-1, -1};
  };

  explicit NonEdgeRange(const Graph& g) : g_(&g) {}
  iterator begin() const {
    return g_->order() < 2 ? end() : iterator(g_, {0, 1});
  }
  iterator end() const { return iterator(g_, {-1, -1}); }

 private:
  const Graph* g_;
};

inline NonEdgeRange nonedge_pairs(const Graph& g) { return NonEdgeRange(g); }
// The range borrows g; a temporary would dangle inside a range-for.
NonEdgeRange nonedge_pairs(Graph&&) = delete;

}  // namespace pathsat
