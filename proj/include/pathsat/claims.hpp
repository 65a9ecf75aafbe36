#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pathsat/graph.hpp"
#include "pathsat/symmetry.hpp"

namespace pathsat {

// A graph built from a textual reference:
//   gn:N  kneser:N[:R]  gp:N:K  qd:D  heawood  coxeter  dyck  raty  petersen
//   cycle:M  path:M  complete:M
// optionally suffixed with *C for C disjoint copies ("gn:2*3").
struct GraphRef {
  std::string ref;
  Graph graph = new_graph(1);
  // Constructor-provided automorphisms, when the family has them.
  std::optional<GeneratorSet> generators;
};

// Throws GraphError on an unknown or malformed reference.
GraphRef resolve_graph(std::string_view ref);

enum class ClaimKind { kSaturated, kFreeOnly, kLongest, kIsomorphic, kCanonicalPaths };
enum class Tier { kCore, kExtended, kStretch };

std::string_view to_string(ClaimKind k);
std::string_view to_string(Tier t);
ClaimKind parse_claim_kind(std::string_view s);
Tier parse_tier(std::string_view s);

struct ClaimSpec {
  std::string id;
  std::string graph;  // a GraphRef string
  // Path order for kSaturated/kFreeOnly, expected length for kLongest, and
  // the largest n for kCanonicalPaths.
  int k = 0;
  ClaimKind kind = ClaimKind::kSaturated;
  Tier tier = Tier::kCore;
  std::vector<std::string> isomorphic_to;  // kIsomorphic only
  bool reduce = false;                     // use the graph's generators
  double budget_seconds = 0.0;             // 0 = unlimited
};

std::vector<ClaimSpec> builtin_claims();

// JSON array of objects with the ClaimSpec field names ("kind" and "tier" as
// strings). Throws FormatError on bad fields or duplicate ids.
std::vector<ClaimSpec> claims_from_json(const nlohmann::json& j);
nlohmann::json claims_to_json(const std::vector<ClaimSpec>& claims);

enum class ClaimVerdict { kConfirmed, kRefuted, kInconclusive };
std::string_view to_string(ClaimVerdict v);

struct ClaimResult {
  ClaimSpec spec;
  ClaimVerdict verdict = ClaimVerdict::kInconclusive;
  std::string detail;
  double seconds = 0.0;
  uint64_t nodes = 0;
  nlohmann::json evidence;
};

struct RunReport {
  std::vector<ClaimResult> results;
  double seconds = 0.0;
  std::string config_hash;

  bool all_confirmed() const;
  nlohmann::json to_json() const;
};

// Hex FNV-1a of the claims' JSON form plus the job count.
std::string config_hash(const std::vector<ClaimSpec>& claims, int jobs);

ClaimResult run_claim(const ClaimSpec& claim, int jobs = 1);
RunReport run_claims(const std::vector<ClaimSpec>& claims, int jobs = 1);

}  // namespace pathsat
