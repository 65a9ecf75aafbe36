#include "pathsat/graph.hpp"

#include <string>

namespace pathsat {

Graph::Graph(int order) : order_(order) {
  if (order < 1 || order > kMaxOrder) {
    throw GraphError("graph order must be in 1.." + std::to_string(kMaxOrder) +
                     ", got " + std::to_string(order));
  }
}

Graph new_graph(int order) { return Graph(order); }

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < order_; ++v) twice += rows_[v].size();
  return twice / 2;
}

std::vector<VertexPair> Graph::edges() const {
  std::vector<VertexPair> out;
  for (Vertex u = 0; u < order_; ++u) {
    rows_[u].for_each([&](Vertex v) {
      if (v > u) out.emplace_back(u, v);
    });
  }
  return out;
}

std::string Graph::label(Vertex v) const {
  if (labels_ && v >= 0 && v < static_cast<int>(labels_->size())) {
    return (*labels_)[v];
  }
  return std::to_string(v);
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (static_cast<int>(labels.size()) != order_) {
    throw GraphError("label count does not match graph order");
  }
  Graph out = *this;
  out.labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
  return out;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order_) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(order_));
  }
}

Graph Graph::with_edge(Vertex u, Vertex v, bool present) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("self-loop requested at vertex " + std::to_string(u));
  Graph out = *this;
  if (present) {
    out.rows_[u].insert(v);
    out.rows_[v].insert(u);
  } else {
    out.rows_[u].erase(v);
    out.rows_[v].erase(u);
  }
  return out;
}

uint64_t Graph::fingerprint() const {
  // FNV-1a over the order and the adjacency words.
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<uint64_t>(order_));
  for (int v = 0; v < order_; ++v) {
    mix(rows_[v].word(0));
    mix(rows_[v].word(1));
  }
  return h;
}

bool Graph::operator==(const Graph& o) const {
  if (order_ != o.order_) return false;
  for (int v = 0; v < order_; ++v) {
    if (!(rows_[v] == o.rows_[v])) return false;
  }
  return true;
}

GraphBuilder& GraphBuilder::set_edge(Vertex u, Vertex v, bool present) {
  graph_.check_vertex(u);
  graph_.check_vertex(v);
  if (u == v) throw GraphError("self-loop requested at vertex " + std::to_string(u));
  if (present) {
    graph_.rows_[u].insert(v);
    graph_.rows_[v].insert(u);
  } else {
    graph_.rows_[u].erase(v);
    graph_.rows_[v].erase(u);
  }
  return *this;
}

GraphBuilder& GraphBuilder::set_labels(std::vector<std::string> labels) {
  graph_ = graph_.with_labels(std::move(labels));
  return *this;
}

std::string_view to_string(PathCheck reason) {
  switch (reason) {
    case PathCheck::kOk: return "ok";
    case PathCheck::kEmpty: return "empty";
    case PathCheck::kOutOfRange: return "out_of_range";
    case PathCheck::kDuplicate: return "duplicate";
    case PathCheck::kMissingEdge: return "missing_edge";
    case PathCheck::kChord: return "chord";
  }
  return "unknown";
}

PathValidation check_induced_path(const Graph& g, std::span<const Vertex> path) {
  if (path.empty()) return {PathCheck::kEmpty};
  VertexSet seen;
  for (int i = 0; i < static_cast<int>(path.size()); ++i) {
    const Vertex v = path[i];
    if (v < 0 || v >= g.order()) return {PathCheck::kOutOfRange, i};
    if (seen.contains(v)) {
      for (int j = 0; j < i; ++j) {
        if (path[j] == v) return {PathCheck::kDuplicate, j, i};
      }
    }
    seen.insert(v);
  }
  const int len = static_cast<int>(path.size());
  for (int i = 0; i + 1 < len; ++i) {
    if (!g.adjacent(path[i], path[i + 1])) return {PathCheck::kMissingEdge, i, i + 1};
  }
  for (int i = 0; i < len; ++i) {
    for (int j = i + 2; j < len; ++j) {
      if (g.adjacent(path[i], path[j])) return {PathCheck::kChord, i, j};
    }
  }
  return {};
}

void NonEdgeRange::iterator::advance() {
  const int n = g_->order();
  do {
    if (++current_.second >= n) {
      ++current_.first;
      current_.second = current_.first + 1;
      if (current_.second >= n) {
        current_ = {-1, -1};
        return;
      }
    }
  } while (!valid());
}

}  // namespace pathsat
