#include "pathsat/report.hpp"

namespace pathsat {

using nlohmann::json;

std::string_view tool_version() { return PATHSAT_VERSION; }

json report_envelope(std::string_view kind) {
  return json{{"schema", kReportSchema}, {"kind", kind}, {"tool", {{"name", "pathsat"}, {"version", tool_version()}}}};
}

json certificate_json(const Graph& g, const PathCertificate& path) {
  json out{{"vertices", path}, {"length", path.size()}};
  if (g.has_labels()) {
    json labels = json::array();
    for (Vertex v : path) labels.push_back(g.label(v));
    out["labels"] = std::move(labels);
  }
  return out;
}

json pair_json(VertexPair e) { return json::array({e.first, e.second}); }

json to_json(const Graph& g, const SearchOutcome& outcome) {
  json out{{"status", to_string(outcome.status)}, {"nodes_expanded", outcome.nodes_expanded}};
  out["certificate"] = outcome.best ? certificate_json(g, *outcome.best) : json(nullptr);
  return out;
}

json to_json(const Graph& g, const SaturationReport& r, bool include_verdicts) {
  json out{
      {"k", r.k},
      {"order", r.order},
      {"edges", g.edge_count()},
      {"summary", to_string(r.summary)},
      {"base",
       {{"free", r.base_free},
        {"status", to_string(r.base_status)},
        {"nodes_expanded", r.base_nodes},
        {"witness", r.base_witness ? certificate_json(g, *r.base_witness) : json(nullptr)}}},
      {"checked", {{"edge_deleted", r.checked_edges}, {"nonedge_added", r.checked_nonedges}}},
      {"symmetry", {{"reduced", r.reduced}, {"generators", r.generator_names}}},
      {"orbits", {{"edges", r.edge_orbits}, {"nonedges", r.nonedge_orbits}}},
      {"counts",
       {{"ok", r.count(VerdictStatus::kOk)},
        {"fail", r.count(VerdictStatus::kFail)},
        {"budget", r.count(VerdictStatus::kBudget)}}},
  };
  if (include_verdicts) {
    json verdicts = json::array();
    for (const auto& v : r.verdicts) {
      json e{{"pair", pair_json(v.pair)},
             {"kind", to_string(v.kind)},
             {"status", to_string(v.status)},
             {"witness", v.witness ? json(*v.witness) : json(nullptr)},
             {"implied", v.implied}};
      if (r.reduced) {
        e["representative"] = pair_json(v.representative);
        e["transport"] = v.transport;
        e["orbit_size"] = v.orbit_size;
      }
      if (!v.implied) e["nodes_expanded"] = v.nodes_expanded;
      verdicts.push_back(std::move(e));
    }
    out["verdicts"] = std::move(verdicts);
  }
  return out;
}

json to_json(const OrbitPartition& part) {
  json classes = json::array();
  for (int c = 0; c < part.class_count(); ++c) {
    json members = json::array();
    for (int i : part.members(c)) {
      const VertexPair& e = part.elements[i];
      members.push_back(part.domain == OrbitDomain::kVertices ? json(e.first) : pair_json(e));
    }
    const VertexPair& rep = part.elements[part.representatives[c]];
    classes.push_back({{"representative", part.domain == OrbitDomain::kVertices ? json(rep.first) : pair_json(rep)},
                       {"size", members.size()},
                       {"members", std::move(members)}});
  }
  return json{{"domain", to_string(part.domain)}, {"count", part.class_count()}, {"classes", std::move(classes)}};
}

json to_json(const Graph& base, const Fixture& f) {
  return json{{"scenario", f.scenario},
              {"pair", pair_json(f.pair)},
              {"kind", to_string(f.kind)},
              {"certificate", certificate_json(base, f.path)},
              {"valid", validates(base, f)}};
}

}  // namespace pathsat
