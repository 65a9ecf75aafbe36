#include "pathsat/saturation.hpp"

#include <algorithm>

#include "parallel.hpp"

namespace pathsat {

std::string_view to_string(Perturbation p) {
  return p == Perturbation::kEdgeDeleted ? "edge_deleted" : "nonedge_added";
}

std::string_view to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::kOk: return "ok";
    case VerdictStatus::kFail: return "fail";
    case VerdictStatus::kBudget: return "budget";
  }
  return "unknown";
}

std::string_view to_string(SaturationSummary s) {
  switch (s) {
    case SaturationSummary::kSaturated: return "saturated";
    case SaturationSummary::kNotFree: return "not_free";
    case SaturationSummary::kMissingWitness: return "missing_witness";
    case SaturationSummary::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

int SaturationReport::count(VerdictStatus s) const {
  return static_cast<int>(std::count_if(verdicts.begin(), verdicts.end(),
                                        [s](const PerturbationVerdict& v) { return v.status == s; }));
}

namespace {

Graph perturb(const Graph& g, VertexPair e, Perturbation kind) {
  return toggle_edge(g, e.first, e.second, kind == Perturbation::kNonEdgeAdded);
}

// Since the base graph has no induced P_k, every induced P_k of the perturbed
// graph contains both endpoints of the toggled pair.
PerturbationVerdict decide(const Graph& g, int k, VertexPair e, Perturbation kind, const SearchBudget& budget) {
  PerturbationVerdict v;
  v.pair = e;
  v.kind = kind;
  v.transport = "id";
  v.representative = e;
  const Graph h = perturb(g, e, kind);
  const SearchOutcome out = find_induced_path_through(h, k, e.first, e.second, budget);
  v.nodes_expanded = out.nodes_expanded;
  switch (out.status) {
    case SearchStatus::kFound:
      if (!is_induced_path(perturb(g, e, kind), *out.best) || static_cast<int>(out.best->size()) != k) {
        throw std::logic_error("witness search returned an invalid certificate");
      }
      v.status = VerdictStatus::kOk;
      v.witness = out.best;
      break;
    case SearchStatus::kExhausted: v.status = VerdictStatus::kFail; break;
    case SearchStatus::kBudgetExceeded: v.status = VerdictStatus::kBudget; break;
  }
  return v;
}

void sweep(const Graph& g, int k, Perturbation kind, const SaturationOptions& options, SaturationReport& report) {
  const OrbitDomain domain = kind == Perturbation::kEdgeDeleted ? OrbitDomain::kEdges : OrbitDomain::kNonEdges;

  if (options.generators == nullptr) {
    std::vector<VertexPair> pairs;
    if (kind == Perturbation::kEdgeDeleted) {
      pairs = g.edges();
    } else {
      for (const VertexPair& e : nonedge_pairs(g)) pairs.push_back(e);
    }
    std::vector<PerturbationVerdict> verdicts(pairs.size());
    detail::run_indexed(options.jobs, static_cast<int>(pairs.size()),
                        [&](int i) { verdicts[i] = decide(g, k, pairs[i], kind, options.witness_budget); });
    report.verdicts.insert(report.verdicts.end(), verdicts.begin(), verdicts.end());
    (kind == Perturbation::kEdgeDeleted ? report.edge_orbits : report.nonedge_orbits) =
        static_cast<int>(pairs.size());
    return;
  }

  const OrbitPartition part = orbits(g, *options.generators, domain);
  const std::vector<Composite> words = transport_words(part, *options.generators);
  const int classes = part.class_count();
  std::vector<PerturbationVerdict> reps(classes);
  detail::run_indexed(options.jobs, classes, [&](int c) {
    reps[c] = decide(g, k, part.elements[part.representatives[c]], kind, options.witness_budget);
  });
  std::vector<int> sizes(classes, 0);
  for (int c : part.class_of) ++sizes[c];

  for (size_t i = 0; i < part.elements.size(); ++i) {
    const int c = part.class_of[i];
    if (static_cast<int>(i) == part.representatives[c]) {
      PerturbationVerdict v = reps[c];
      v.orbit_size = sizes[c];
      report.verdicts.push_back(std::move(v));
      continue;
    }
    PerturbationVerdict v;
    v.pair = part.elements[i];
    v.kind = kind;
    v.status = reps[c].status;
    v.implied = true;
    v.representative = reps[c].pair;
    v.transport = words[i].to_string();
    v.orbit_size = 0;
    if (reps[c].witness) {
      PathCertificate moved = pathsat::apply(words[i].perm, *reps[c].witness);
      if (!is_induced_path(perturb(g, v.pair, kind), moved)) {
        throw SymmetryError("transported witness failed for pair {" + std::to_string(v.pair.first) + "," +
                            std::to_string(v.pair.second) + "}");
      }
      v.witness = std::move(moved);
    }
    report.verdicts.push_back(std::move(v));
  }
  (kind == Perturbation::kEdgeDeleted ? report.edge_orbits : report.nonedge_orbits) = classes;
}

SaturationReport run(const Graph& g, int k, const SaturationOptions& options, bool edges, bool nonedges) {
  if (k < 2) throw GraphError("saturation check requires k >= 2");
  if (options.generators != nullptr && !options.generators->verified_for(g)) {
    throw SymmetryError("generator set was not verified for this graph");
  }
  SaturationReport report;
  report.k = k;
  report.order = g.order();
  report.checked_edges = edges;
  report.checked_nonedges = nonedges;
  report.reduced = options.generators != nullptr;
  if (options.generators != nullptr) report.generator_names = options.generators->names();

  SearchOptions base;
  base.budget = options.base_budget;
  base.generators = options.generators;
  base.jobs = options.jobs;
  const SearchOutcome free_check = has_induced_path(g, k, base);
  report.base_status = free_check.status;
  report.base_nodes = free_check.nodes_expanded;
  report.base_witness = free_check.best;
  report.base_free = free_check.status == SearchStatus::kExhausted;
  if (free_check.status == SearchStatus::kFound) {
    report.summary = SaturationSummary::kNotFree;
    return report;
  }
  if (free_check.status == SearchStatus::kBudgetExceeded) {
    report.summary = SaturationSummary::kInconclusive;
    return report;
  }

  if (edges) sweep(g, k, Perturbation::kEdgeDeleted, options, report);
  if (nonedges) sweep(g, k, Perturbation::kNonEdgeAdded, options, report);

  if (report.count(VerdictStatus::kFail) > 0) {
    report.summary = SaturationSummary::kMissingWitness;
  } else if (report.count(VerdictStatus::kBudget) > 0) {
    report.summary = SaturationSummary::kInconclusive;
  } else {
    report.summary = SaturationSummary::kSaturated;
  }
  return report;
}

}  // namespace

SaturationReport verify_induced_saturated(const Graph& g, int k, const SaturationOptions& options) {
  return run(g, k, options, true, true);
}

SaturationReport verify_deletion_side(const Graph& g, int k, const SaturationOptions& options) {
  return run(g, k, options, true, false);
}

SaturationReport verify_addition_side(const Graph& g, int k, const SaturationOptions& options) {
  return run(g, k, options, false, true);
}

}  // namespace pathsat
