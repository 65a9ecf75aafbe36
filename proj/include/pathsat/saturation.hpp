#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathsat/graph.hpp"
#include "pathsat/path_search.hpp"
#include "pathsat/symmetry.hpp"

namespace pathsat {

enum class Perturbation { kEdgeDeleted, kNonEdgeAdded };
enum class VerdictStatus { kOk, kFail, kBudget };
enum class SaturationSummary { kSaturated, kNotFree, kMissingWitness, kInconclusive };

std::string_view to_string(Perturbation p);
std::string_view to_string(VerdictStatus s);
std::string_view to_string(SaturationSummary s);

struct PerturbationVerdict {
  VertexPair pair{};
  Perturbation kind = Perturbation::kEdgeDeleted;
  VerdictStatus status = VerdictStatus::kFail;
  // Present iff status is kOk; re-validated in a freshly perturbed copy.
  std::optional<PathCertificate> witness;
  uint64_t nodes_expanded = 0;

  // Reduced runs only. An implied verdict copies its representative's status
  // and carries the witness transported by `transport`.
  bool implied = false;
  VertexPair representative{};
  std::string transport;  // generator word, "id" for representatives
  int orbit_size = 1;     // on representatives
};

struct SaturationOptions {
  // Base-graph freeness check. Unlimited by default; a budget hit makes the
  // summary inconclusive.
  SearchBudget base_budget;
  // Per-perturbation witness search.
  SearchBudget witness_budget;
  // When set, only orbit representatives are searched.
  const GeneratorSet* generators = nullptr;
  int jobs = 1;
};

struct SaturationReport {
  int k = 0;
  int order = 0;
  bool base_free = false;
  SearchStatus base_status = SearchStatus::kExhausted;
  std::optional<PathCertificate> base_witness;  // an induced P_k when not free
  uint64_t base_nodes = 0;

  bool checked_edges = false;
  bool checked_nonedges = false;
  bool reduced = false;
  std::vector<std::string> generator_names;
  int edge_orbits = 0;
  int nonedge_orbits = 0;

  // Every checked pair in ascending (kind, pair) order; edges first.
  std::vector<PerturbationVerdict> verdicts;
  SaturationSummary summary = SaturationSummary::kInconclusive;

  int count(VerdictStatus s) const;
  bool saturated() const { return summary == SaturationSummary::kSaturated; }
};

// Base check, then every edge deletion and every non-edge addition. The sweep
// runs only when the base graph is P_k-free. The side variants sweep one half;
// their summary covers the checked half only.
SaturationReport verify_induced_saturated(const Graph& g, int k, const SaturationOptions& options = {});
SaturationReport verify_deletion_side(const Graph& g, int k, const SaturationOptions& options = {});
SaturationReport verify_addition_side(const Graph& g, int k, const SaturationOptions& options = {});

}  // namespace pathsat
