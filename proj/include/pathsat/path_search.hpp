#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "pathsat/graph.hpp"
#include "pathsat/symmetry.hpp"

namespace pathsat {

// Zero means unlimited.
struct SearchBudget {
  uint64_t node_limit = 0;
  double time_limit = 0.0;  // wall-clock seconds

  bool unlimited() const { return node_limit == 0 && time_limit <= 0.0; }
};

enum class SearchStatus { kFound, kExhausted, kBudgetExceeded };

std::string_view to_string(SearchStatus s);

struct SearchOutcome {
  SearchStatus status = SearchStatus::kExhausted;
  // Present when status is kFound. For longest_induced_path it is the best
  // path seen, which is a maximum when status is kExhausted.
  std::optional<PathCertificate> best;
  uint64_t nodes_expanded = 0;
};

struct SearchOptions {
  SearchBudget budget;
  // When set, only vertex-orbit representatives are used as start vertices.
  const GeneratorSet* generators = nullptr;
  // Start vertices are split over this many threads. Output does not depend
  // on the value when the budget is unlimited.
  int jobs = 1;
  // Additionally prune on the number of usable vertices reachable from the
  // growing end, not just the usable count.
  bool connectivity_bound = false;
};

// Decides whether g has an induced path on exactly k vertices (k >= 1). The
// certificate is the lexicographically least one among the start vertices
// searched, extensions tried in ascending index order.
SearchOutcome has_induced_path(const Graph& g, int k, const SearchOptions& options = {});

// Maximum induced path. Ties break toward the lexicographically least
// certificate. On budget exhaustion the best path so far is returned.
SearchOutcome longest_induced_path(const Graph& g, const SearchOptions& options = {});

// Induced path on exactly k vertices that contains both `anchor` and
// `required`, grown in both directions from the anchor. Single-threaded.
SearchOutcome find_induced_path_through(const Graph& g, int k, Vertex anchor, Vertex required,
                                        const SearchBudget& budget = {});

// Vertices that may still join a path grown from path.back(): off the path and
// non-adjacent to every other path vertex. Empty path gives all vertices.
VertexSet usable_vertices(const Graph& g, std::span<const Vertex> path);

inline constexpr int kMaxBruteForceOrder = 12;

// Reference implementation: enumerates adjacency-extended vertex sequences and
// re-checks each with check_induced_path(); no bounds. Throws GraphError for
// order > kMaxBruteForceOrder.
int brute_force_longest(const Graph& g);

}  // namespace pathsat
