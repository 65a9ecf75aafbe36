#include "pathsat/claims.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <set>

#include "pathsat/certificates.hpp"
#include "pathsat/constructions.hpp"
#include "pathsat/formats.hpp"
#include "pathsat/path_search.hpp"
#include "pathsat/permutation.hpp"
#include "pathsat/report.hpp"
#include "pathsat/saturation.hpp"

namespace pathsat {

using nlohmann::json;

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    const size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int parse_int(std::string_view s, std::string_view ref) {
  int value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw GraphError("bad integer '" + std::string(s) + "' in graph reference '" + std::string(ref) + "'");
  }
  return value;
}

GraphRef resolve_single(std::string_view ref) {
  const auto parts = split(ref, ':');
  const std::string_view name = parts[0];
  auto arg = [&](size_t i) { return parse_int(parts.at(i), ref); };
  auto want = [&](size_t lo, size_t hi) {
    if (parts.size() - 1 < lo || parts.size() - 1 > hi) {
      throw GraphError("wrong number of parameters in graph reference '" + std::string(ref) + "'");
    }
  };

  GraphRef out;
  out.ref = std::string(ref);
  if (name == "gn") {
    want(1, 1);
    out.graph = build_gn(arg(1));
    out.generators = gn_generators(arg(1));
  } else if (name == "kneser") {
    want(1, 2);
    const int r = parts.size() > 2 ? arg(2) : 2;
    out.graph = build_kneser(arg(1), r);
    out.generators = kneser_generators(arg(1), r);
  } else if (name == "gp") {
    want(2, 2);
    out.graph = build_generalized_petersen(arg(1), arg(2));
  } else if (name == "qd") {
    want(1, 1);
    out.graph = build_hypercube_diag(arg(1));
  } else if (name == "heawood" || name == "coxeter" || name == "dyck") {
    want(0, 0);
    out.graph = build_named(name == "heawood"   ? NamedGraph::kHeawood
                            : name == "coxeter" ? NamedGraph::kCoxeter
                                                : NamedGraph::kDyck);
  } else if (name == "raty") {
    want(0, 0);
    out.graph = build_raty();
  } else if (name == "petersen") {
    want(0, 0);
    out.graph = build_generalized_petersen(5, 2);
  } else if (name == "cycle") {
    want(1, 1);
    out.graph = build_cycle(arg(1));
  } else if (name == "path") {
    want(1, 1);
    out.graph = build_path(arg(1));
  } else if (name == "complete") {
    want(1, 1);
    out.graph = build_complete(arg(1));
  } else {
    throw GraphError("unknown graph reference '" + std::string(ref) + "'");
  }
  return out;
}

std::string hex64(uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

GraphRef resolve_graph(std::string_view ref) {
  const auto star = ref.find('*');
  if (star == std::string_view::npos) return resolve_single(ref);
  const int copies = parse_int(ref.substr(star + 1), ref);
  if (copies < 1) throw GraphError("copy count must be >= 1 in '" + std::string(ref) + "'");
  GraphRef base = resolve_single(ref.substr(0, star));
  GraphRef out;
  out.ref = std::string(ref);
  out.graph = disjoint_union(base.graph, copies);
  if (base.generators) out.generators = union_generators(base.graph, *base.generators, copies);
  return out;
}

std::string_view to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::kSaturated: return "saturated";
    case ClaimKind::kFreeOnly: return "free_only";
    case ClaimKind::kLongest: return "longest";
    case ClaimKind::kIsomorphic: return "isomorphic";
    case ClaimKind::kCanonicalPaths: return "canonical_paths";
  }
  return "unknown";
}

std::string_view to_string(Tier t) {
  switch (t) {
    case Tier::kCore: return "core";
    case Tier::kExtended: return "extended";
    case Tier::kStretch: return "stretch";
  }
  return "unknown";
}

ClaimKind parse_claim_kind(std::string_view s) {
  for (ClaimKind k : {ClaimKind::kSaturated, ClaimKind::kFreeOnly, ClaimKind::kLongest, ClaimKind::kIsomorphic,
                      ClaimKind::kCanonicalPaths}) {
    if (to_string(k) == s) return k;
  }
  throw FormatError("unknown claim kind '" + std::string(s) + "'");
}

Tier parse_tier(std::string_view s) {
  for (Tier t : {Tier::kCore, Tier::kExtended, Tier::kStretch}) {
    if (to_string(t) == s) return t;
  }
  throw FormatError("unknown tier '" + std::string(s) + "'");
}

std::string_view to_string(ClaimVerdict v) {
  switch (v) {
    case ClaimVerdict::kConfirmed: return "confirmed";
    case ClaimVerdict::kRefuted: return "refuted";
    case ClaimVerdict::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

std::vector<ClaimSpec> builtin_claims() {
  using K = ClaimKind;
  using T = Tier;
  auto sat = [](std::string id, std::string graph, int k, T tier, bool reduce = false, double budget = 0.0) {
    return ClaimSpec{std::move(id), std::move(graph), k, K::kSaturated, tier, {}, reduce, budget};
  };
  auto longest = [](std::string id, std::string graph, int len, T tier, double budget = 0.0) {
    return ClaimSpec{std::move(id), std::move(graph), len, K::kLongest, tier, {}, true, budget};
  };
  constexpr double kStretchBudget = 7200.0;
  return {
      sat("gn2-p6", "gn:2", 6, T::kCore),
      sat("gn3-p9", "gn:3", 9, T::kCore),
      sat("kneser5-p6", "kneser:5", 6, T::kCore),
      sat("kneser6-p6", "kneser:6", 6, T::kCore),
      sat("kneser7-p6", "kneser:7", 6, T::kCore),
      sat("heawood-p8", "heawood", 8, T::kCore),
      sat("heawood-p9", "heawood", 9, T::kCore),
      ClaimSpec{"raty-gn2-qd4", "raty", 0, K::kIsomorphic, T::kCore, {"gn:2", "qd:4"}},
      sat("gn2x2-p6", "gn:2*2", 6, T::kCore),
      ClaimSpec{"canonical-paths", "gn", 10, K::kCanonicalPaths, T::kCore, {}},
      longest("gn2-longest", "gn:2", 5, T::kCore),
      longest("gn3-longest", "gn:3", 8, T::kCore),

      sat("gn4-p12", "gn:4", 12, T::kExtended, true),
      longest("gn4-longest", "gn:4", 11, T::kExtended),
      sat("gn2x3-p6", "gn:2*3", 6, T::kExtended),
      sat("gp10-3-p12", "gp:10:3", 12, T::kExtended),
      sat("gp10-3-p13", "gp:10:3", 13, T::kExtended),
      sat("qd5-p12", "qd:5", 12, T::kExtended),
      sat("qd5-p13", "qd:5", 13, T::kExtended),
      sat("qd5-p14", "qd:5", 14, T::kExtended),

      sat("coxeter-p19", "coxeter", 19, T::kStretch, false, kStretchBudget),
      sat("dyck-p21", "dyck", 21, T::kStretch, false, kStretchBudget),
      sat("dyck-p22", "dyck", 22, T::kStretch, false, kStretchBudget),
      sat("gp17-3-p23", "gp:17:3", 23, T::kStretch, false, kStretchBudget),
      sat("gp17-6-p23", "gp:17:6", 23, T::kStretch, false, kStretchBudget),
      sat("gn5-p15", "gn:5", 15, T::kStretch, true, kStretchBudget),
      longest("gn5-longest", "gn:5", 14, T::kStretch, kStretchBudget),
  };
}

std::vector<ClaimSpec> claims_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("claims file must hold a JSON array");
  std::vector<ClaimSpec> out;
  std::set<std::string> ids;
  for (const auto& item : j) {
    try {
      ClaimSpec c;
      c.id = item.at("id").get<std::string>();
      c.graph = item.at("graph").get<std::string>();
      c.kind = parse_claim_kind(item.at("kind").get<std::string>());
      c.tier = parse_tier(item.value("tier", std::string("core")));
      c.k = item.value("k", 0);
      c.isomorphic_to = item.value("isomorphic_to", std::vector<std::string>{});
      c.reduce = item.value("reduce", false);
      c.budget_seconds = item.value("budget_seconds", 0.0);
      if (!ids.insert(c.id).second) throw FormatError("duplicate claim id '" + c.id + "'");
      out.push_back(std::move(c));
    } catch (const json::exception& e) {
      throw FormatError(std::string("malformed claim: ") + e.what());
    }
  }
  return out;
}

json claims_to_json(const std::vector<ClaimSpec>& claims) {
  json out = json::array();
  for (const auto& c : claims) {
    out.push_back({{"id", c.id},
                   {"graph", c.graph},
                   {"k", c.k},
                   {"kind", to_string(c.kind)},
                   {"tier", to_string(c.tier)},
                   {"isomorphic_to", c.isomorphic_to},
                   {"reduce", c.reduce},
                   {"budget_seconds", c.budget_seconds}});
  }
  return out;
}

std::string config_hash(const std::vector<ClaimSpec>& claims, int jobs) {
  const std::string text = claims_to_json(claims).dump() + "|jobs=" + std::to_string(jobs);
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return hex64(h);
}

ClaimResult run_claim(const ClaimSpec& claim, int jobs) {
  ClaimResult res;
  res.spec = claim;
  const auto t0 = std::chrono::steady_clock::now();
  SearchBudget budget;
  budget.time_limit = claim.budget_seconds;

  switch (claim.kind) {
    case ClaimKind::kSaturated:
    case ClaimKind::kFreeOnly: {
      const GraphRef ref = resolve_graph(claim.graph);
      SaturationOptions opt;
      opt.base_budget = budget;
      opt.witness_budget = budget;
      opt.jobs = jobs;
      if (claim.reduce && ref.generators) opt.generators = &*ref.generators;
      if (claim.kind == ClaimKind::kFreeOnly) {
        SearchOptions so;
        so.budget = budget;
        so.generators = opt.generators;
        so.jobs = jobs;
        const SearchOutcome out = has_induced_path(ref.graph, claim.k, so);
        res.nodes = out.nodes_expanded;
        res.evidence = to_json(ref.graph, out);
        res.verdict = out.status == SearchStatus::kExhausted ? ClaimVerdict::kConfirmed
                      : out.status == SearchStatus::kFound   ? ClaimVerdict::kRefuted
                                                             : ClaimVerdict::kInconclusive;
        res.detail = "P" + std::to_string(claim.k) + " search " + std::string(to_string(out.status));
        break;
      }
      const SaturationReport rep = verify_induced_saturated(ref.graph, claim.k, opt);
      res.nodes = rep.base_nodes;
      for (const auto& v : rep.verdicts) res.nodes += v.nodes_expanded;
      res.evidence = to_json(ref.graph, rep, false);
      res.verdict = rep.summary == SaturationSummary::kSaturated      ? ClaimVerdict::kConfirmed
                    : rep.summary == SaturationSummary::kInconclusive ? ClaimVerdict::kInconclusive
                                                                      : ClaimVerdict::kRefuted;
      res.detail = std::string(to_string(rep.summary));
      break;
    }
    case ClaimKind::kLongest: {
      const GraphRef ref = resolve_graph(claim.graph);
      SearchOptions so;
      so.budget = budget;
      so.jobs = jobs;
      if (claim.reduce && ref.generators) so.generators = &*ref.generators;
      const SearchOutcome out = longest_induced_path(ref.graph, so);
      const int len = out.best ? static_cast<int>(out.best->size()) : 0;
      res.nodes = out.nodes_expanded;
      res.evidence = to_json(ref.graph, out);
      if (out.status == SearchStatus::kExhausted) {
        res.verdict = len == claim.k ? ClaimVerdict::kConfirmed : ClaimVerdict::kRefuted;
      } else {
        res.verdict = len > claim.k ? ClaimVerdict::kRefuted : ClaimVerdict::kInconclusive;
      }
      res.detail = "longest " + std::to_string(len) + " (" + std::string(to_string(out.status)) + ")";
      break;
    }
    case ClaimKind::kIsomorphic: {
      const GraphRef ref = resolve_graph(claim.graph);
      res.verdict = ClaimVerdict::kConfirmed;
      res.evidence = json::object();
      for (const auto& other_ref : claim.isomorphic_to) {
        const GraphRef other = resolve_graph(other_ref);
        const auto witness = are_isomorphic(ref.graph, other.graph);
        bool ok = false;
        if (witness) {
          ok = true;
          for (Vertex u = 0; u < ref.graph.order() && ok; ++u) {
            for (Vertex v = u + 1; v < ref.graph.order(); ++v) {
              if (ref.graph.adjacent(u, v) != other.graph.adjacent((*witness)(u), (*witness)(v))) {
                ok = false;
                break;
              }
            }
          }
        }
        if (!ok) res.verdict = ClaimVerdict::kRefuted;
        res.evidence[other_ref] =
            witness ? json(std::vector<Vertex>(witness->image().begin(), witness->image().end())) : json(nullptr);
      }
      res.detail = res.verdict == ClaimVerdict::kConfirmed ? "witnesses verified" : "no isomorphism";
      break;
    }
    case ClaimKind::kCanonicalPaths: {
      res.verdict = ClaimVerdict::kConfirmed;
      res.evidence = json::object();
      for (int n = 2; n <= claim.k; ++n) {
        try {
          const PathCertificate p = canonical_long_path(n);
          const bool ok = is_induced_path(build_gn(n), p) && static_cast<int>(p.size()) == 3 * n - 1;
          if (!ok) res.verdict = ClaimVerdict::kRefuted;
          res.evidence[std::to_string(n)] = p;
        } catch (const std::logic_error& e) {
          res.verdict = ClaimVerdict::kRefuted;
          res.evidence[std::to_string(n)] = e.what();
        }
      }
      res.detail = "n = 2.." + std::to_string(claim.k);
      break;
    }
  }
  res.seconds = seconds_since(t0);
  return res;
}

RunReport run_claims(const std::vector<ClaimSpec>& claims, int jobs) {
  RunReport report;
  report.config_hash = config_hash(claims, jobs);
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& c : claims) report.results.push_back(run_claim(c, jobs));
  report.seconds = seconds_since(t0);
  return report;
}

bool RunReport::all_confirmed() const {
  for (const auto& r : results) {
    if (r.verdict != ClaimVerdict::kConfirmed) return false;
  }
  return true;
}

json RunReport::to_json() const {
  json out = report_envelope("paper_suite");
  out["config_hash"] = config_hash;
  out["seconds"] = seconds;
  out["all_confirmed"] = all_confirmed();
  json items = json::array();
  for (const auto& r : results) {
    items.push_back({{"id", r.spec.id},
                     {"graph", r.spec.graph},
                     {"kind", pathsat::to_string(r.spec.kind)},
                     {"tier", pathsat::to_string(r.spec.tier)},
                     {"k", r.spec.k},
                     {"verdict", pathsat::to_string(r.verdict)},
                     {"detail", r.detail},
                     {"seconds", r.seconds},
                     {"nodes_expanded", r.nodes},
                     {"evidence", r.evidence}});
  }
  out["claims"] = std::move(items);
  return out;
}

}  // namespace pathsat
