#pragma once

#include <string_view>

#include <json.hpp>

#include "pathsat/certificates.hpp"
#include "pathsat/graph.hpp"
#include "pathsat/path_search.hpp"
#include "pathsat/saturation.hpp"
#include "pathsat/symmetry.hpp"

namespace pathsat {

inline constexpr std::string_view kReportSchema = "pathsat-report/1";

std::string_view tool_version();

// {"schema", "kind", "tool": {"name", "version"}}; payload fields go next to it.
nlohmann::json report_envelope(std::string_view kind);

// Certificates are index lists; "labels" mirrors them when g carries labels.
nlohmann::json certificate_json(const Graph& g, const PathCertificate& path);
nlohmann::json pair_json(VertexPair e);

nlohmann::json to_json(const Graph& g, const SearchOutcome& outcome);
nlohmann::json to_json(const Graph& g, const SaturationReport& report, bool include_verdicts = true);
nlohmann::json to_json(const OrbitPartition& part);
nlohmann::json to_json(const Graph& base, const Fixture& fixture);

}  // namespace pathsat
