#include "pathsat/path_search.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <functional>
#include <mutex>
#include <vector>

namespace pathsat {

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound: return "found";
    case SearchStatus::kExhausted: return "exhausted";
    case SearchStatus::kBudgetExceeded: return "budget_exceeded";
  }
  return "unknown";
}

namespace {

constexpr uint64_t kCheckInterval = 4096;

// Budget shared by all workers of one search.
class BudgetClock {
 public:
  explicit BudgetClock(const SearchBudget& b)
      : budget_(b), start_(std::chrono::steady_clock::now()),
        interval_(b.node_limit > 0 ? std::clamp<uint64_t>(b.node_limit / 16, 1, kCheckInterval) : kCheckInterval) {}

  // Nodes between polls; overshoot of the node limit is below one interval
  // per worker.
  uint64_t interval() const { return interval_; }

  // Charges `n` nodes; returns false once the budget is exhausted.
  bool charge(uint64_t n) {
    const uint64_t total = nodes_.fetch_add(n, std::memory_order_relaxed) + n;
    if (budget_.node_limit > 0 && total >= budget_.node_limit) exceeded_ = true;
    if (budget_.time_limit > 0.0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() >= budget_.time_limit) exceeded_ = true;
    }
    return !exceeded_;
  }

  bool exceeded() const { return exceeded_; }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  uint64_t interval_;
  std::atomic<uint64_t> nodes_{0};
  std::atomic<bool> exceeded_{false};
};

// Depth-first induced-path search from one growing end.
//
// Invariant at every node: `blocked` = path ∪ N(path minus the growing end),
// so the extension candidates are N(end) \ blocked and the usable vertices
// are V \ blocked.
class Walker {
 public:
  Walker(const Graph& g, bool connectivity, BudgetClock& clock, std::function<bool()> cancelled = {})
      : g_(g), all_(g.vertices()), connectivity_(connectivity), clock_(clock),
        cancelled_(std::move(cancelled)) {}

  bool find_from(Vertex start, int k) {
    k_ = k;
    path_[0] = start;
    on_path_ = {};
    on_path_.insert(start);
    VertexSet blocked;
    blocked.insert(start);
    return extend_to(1, start, blocked);
  }

  void longest_from(Vertex start, const std::atomic<int>* shared_best) {
    shared_best_ = shared_best;
    path_[0] = start;
    VertexSet blocked;
    blocked.insert(start);
    longest(1, start, blocked);
  }

  // Anchored search, see find_induced_path_through().
  bool find_through(Vertex anchor, Vertex required, int k) {
    k_ = k;
    required_ = required;
    path_[0] = anchor;
    on_path_ = {};
    on_path_.insert(anchor);
    VertexSet closed;
    closed.insert(anchor);
    return grow_right(1, closed);
  }

  PathCertificate path(int len) const { return PathCertificate(path_.begin(), path_.begin() + len); }
  // Certificate of an anchored hit: left part reversed, then the right part.
  PathCertificate anchored_path() const {
    PathCertificate out(path_.begin() + right_len_, path_.begin() + k_);
    std::reverse(out.begin(), out.end());
    out.insert(out.end(), path_.begin(), path_.begin() + right_len_);
    return out;
  }

  const PathCertificate& best() const { return best_; }
  int best_len() const { return best_len_; }
  bool aborted() const { return aborted_; }
  uint64_t nodes() const { return nodes_; }

 private:
  bool tick() {
    if ((++nodes_ % clock_.interval()) == 0) {
      if (!clock_.charge(clock_.interval()) || (cancelled_ && cancelled_())) aborted_ = true;
    }
    return !aborted_;
  }

  int reachable_count(Vertex end, const VertexSet& usable) const {
    VertexSet seen;
    VertexSet frontier = g_.neighbors(end) & usable;
    while (!frontier.empty()) {
      seen |= frontier;
      VertexSet next;
      frontier.for_each([&](Vertex v) { next |= g_.neighbors(v); });
      frontier = (next & usable) - seen;
    }
    return seen.size();
  }

  bool extend_to(int len, Vertex end, const VertexSet& blocked) {
    if (len == k_) {
      return required_ < 0 || on_path_.contains(required_);
    }
    if (!tick()) return false;
    const VertexSet usable = all_ - blocked;
    if (len + usable.size() < k_) return false;
    if (required_ >= 0 && !on_path_.contains(required_) && blocked.contains(required_)) return false;
    if (connectivity_ && len + reachable_count(end, usable) < k_) return false;
    const VertexSet candidates = g_.neighbors(end) - blocked;
    const VertexSet next_blocked = blocked | g_.neighbors(end);
    bool found = false;
    candidates.for_each([&](Vertex u) {
      if (found || aborted_) return;
      path_[len] = u;
      on_path_.insert(u);
      found = extend_to(len + 1, u, next_blocked);
      on_path_.erase(u);
    });
    return found;
  }

  void longest(int len, Vertex end, const VertexSet& blocked) {
    if (len > best_len_) {
      best_len_ = len;
      best_.assign(path_.begin(), path_.begin() + len);
      if (shared_best_) {
        auto* shared = const_cast<std::atomic<int>*>(shared_best_);
        int cur = shared->load();
        while (cur < len && !shared->compare_exchange_weak(cur, len)) {
        }
      }
    }
    if (!tick()) return;
    const VertexSet usable = all_ - blocked;
    const int bound = len + usable.size();
    // Strict against other workers so equal-length, lexicographically
    // smaller certificates from this start are still reached.
    if (bound <= best_len_ || (shared_best_ && bound < shared_best_->load(std::memory_order_relaxed))) {
      return;
    }
    if (connectivity_ && len + reachable_count(end, usable) <= best_len_) return;
    const VertexSet candidates = g_.neighbors(end) - blocked;
    const VertexSet next_blocked = blocked | g_.neighbors(end);
    candidates.for_each([&](Vertex u) {
      if (aborted_) return;
      path_[len] = u;
      longest(len + 1, u, next_blocked);
    });
  }

  // Phase one of the anchored search: path_[0] is the anchor, path_[len-1]
  // the right end. `closed` = right part ∪ N(right part minus both ends).
  bool grow_right(int len, const VertexSet& closed) {
    const Vertex anchor = path_[0];
    const Vertex end = path_[len - 1];
    if (len == k_) {
      right_len_ = len;
      return on_path_.contains(required_);
    }
    if (!tick()) return false;
    const VertexSet usable = all_ - closed;
    if (len + usable.size() < k_) return false;
    if (!on_path_.contains(required_) && closed.contains(required_)) return false;

    // Freeze the right end and grow leftwards from the anchor.
    VertexSet left_blocked = closed;
    if (len >= 2) left_blocked |= g_.neighbors(end);
    right_len_ = len;
    if (extend_to(len, anchor, left_blocked)) return true;
    if (aborted_) return false;

    VertexSet candidates = g_.neighbors(end) - closed;
    VertexSet next_closed = closed;
    if (len >= 2) {
      candidates -= g_.neighbors(anchor);
      next_closed |= g_.neighbors(end);
    }
    bool found = false;
    candidates.for_each([&](Vertex u) {
      if (found || aborted_) return;
      path_[len] = u;
      on_path_.insert(u);
      VertexSet child = next_closed;
      child.insert(u);
      found = grow_right(len + 1, child);
      on_path_.erase(u);
    });
    return found;
  }

  const Graph& g_;
  const VertexSet all_;
  const bool connectivity_;
  BudgetClock& clock_;
  std::function<bool()> cancelled_;

  std::array<Vertex, kMaxOrder> path_{};
  VertexSet on_path_;
  int k_ = 0;
  Vertex required_ = -1;
  int right_len_ = 0;

  const std::atomic<int>* shared_best_ = nullptr;
  int best_len_ = 0;
  PathCertificate best_;

  uint64_t nodes_ = 0;
  bool aborted_ = false;
};

std::vector<Vertex> start_vertices(const Graph& g, const SearchOptions& options) {
  if (options.generators == nullptr || options.generators->empty()) return g.vertices().to_vector();
  const OrbitPartition part = orbits(g, *options.generators, OrbitDomain::kVertices);
  std::vector<Vertex> starts;
  for (int rep : part.representatives) starts.push_back(part.elements[rep].first);
  return starts;
}

}  // namespace

SearchOutcome has_induced_path(const Graph& g, int k, const SearchOptions& options) {
  if (k < 1) throw GraphError("has_induced_path requires k >= 1");
  SearchOutcome out;
  if (k > g.order()) return out;
  const std::vector<Vertex> starts = start_vertices(g, options);
  if (k == 1) {
    out.status = SearchStatus::kFound;
    out.best = PathCertificate{starts.front()};
    out.nodes_expanded = 1;
    return out;
  }

  BudgetClock clock(options.budget);
  std::atomic<int> found_at{INT_MAX};
  std::atomic<uint64_t> nodes{0};
  std::vector<PathCertificate> hits(starts.size());
  std::mutex hits_mutex;
  const int count = static_cast<int>(starts.size());

  detail::run_indexed(options.jobs, count, [&](int i) {
    if (i > found_at.load() || clock.exceeded()) return;
    Walker w(g, options.connectivity_bound, clock, [&found_at, i] { return found_at.load() < i; });
    const bool hit = w.find_from(starts[i], k);
    nodes += w.nodes();
    if (hit) {
      {
        std::lock_guard lock(hits_mutex);
        hits[i] = w.path(k);
      }
      int cur = found_at.load();
      while (i < cur && !found_at.compare_exchange_weak(cur, i)) {
      }
    }
  });

  out.nodes_expanded = nodes.load();
  if (found_at.load() != INT_MAX) {
    out.status = SearchStatus::kFound;
    out.best = hits[found_at.load()];
  } else if (clock.exceeded()) {
    out.status = SearchStatus::kBudgetExceeded;
  }
  return out;
}

SearchOutcome longest_induced_path(const Graph& g, const SearchOptions& options) {
  const std::vector<Vertex> starts = start_vertices(g, options);
  BudgetClock clock(options.budget);
  std::atomic<int> shared_best{0};
  std::atomic<uint64_t> nodes{0};
  std::vector<PathCertificate> bests(starts.size());
  std::mutex mutex;
  const int count = static_cast<int>(starts.size());

  detail::run_indexed(options.jobs, count, [&](int i) {
    if (clock.exceeded()) return;
    Walker w(g, options.connectivity_bound, clock);
    w.longest_from(starts[i], options.jobs > 1 ? &shared_best : nullptr);
    nodes += w.nodes();
    std::lock_guard lock(mutex);
    bests[i] = w.best();
  });

  SearchOutcome out;
  out.nodes_expanded = nodes.load();
  for (const auto& cand : bests) {
    if (cand.empty()) continue;
    if (!out.best || cand.size() > out.best->size() ||
        (cand.size() == out.best->size() && cand < *out.best)) {
      out.best = cand;
    }
  }
  out.status = clock.exceeded() ? SearchStatus::kBudgetExceeded : SearchStatus::kExhausted;
  return out;
}

SearchOutcome find_induced_path_through(const Graph& g, int k, Vertex anchor, Vertex required,
                                        const SearchBudget& budget) {
  if (k < 1) throw GraphError("find_induced_path_through requires k >= 1");
  if (anchor < 0 || anchor >= g.order() || required < 0 || required >= g.order()) {
    throw GraphError("anchor or required vertex out of range");
  }
  SearchOutcome out;
  if (k > g.order()) return out;
  BudgetClock clock(budget);
  Walker w(g, false, clock);
  const bool hit = w.find_through(anchor, required, k);
  out.nodes_expanded = w.nodes();
  if (hit) {
    out.status = SearchStatus::kFound;
    out.best = w.anchored_path();
  } else if (w.aborted()) {
    out.status = SearchStatus::kBudgetExceeded;
  }
  return out;
}

VertexSet usable_vertices(const Graph& g, std::span<const Vertex> path) {
  VertexSet blocked;
  for (size_t i = 0; i < path.size(); ++i) {
    blocked.insert(path[i]);
    if (i + 1 < path.size()) blocked |= g.neighbors(path[i]);
  }
  return g.vertices() - blocked;
}

int brute_force_longest(const Graph& g) {
  if (g.order() > kMaxBruteForceOrder) {
    throw GraphError("brute_force_longest supports at most " + std::to_string(kMaxBruteForceOrder) +
                     " vertices");
  }
  int best = 1;
  std::vector<Vertex> seq;
  std::function<void()> visit = [&] {
    if (!is_induced_path(g, seq)) return;
    best = std::max(best, static_cast<int>(seq.size()));
    for (Vertex u = 0; u < g.order(); ++u) {
      if (!g.adjacent(seq.back(), u)) continue;
      if (std::find(seq.begin(), seq.end(), u) != seq.end()) continue;
      seq.push_back(u);
      visit();
      seq.pop_back();
    }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    seq = {s};
    visit();
  }
  return best;
}

}  // namespace pathsat
