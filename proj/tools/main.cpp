// pathsat: construct graphs, search induced paths, verify induced saturation.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "graph_input.hpp"
#include "pathsat/certificates.hpp"
#include "pathsat/claims.hpp"
#include "pathsat/constructions.hpp"
#include "pathsat/formats.hpp"
#include "pathsat/path_search.hpp"
#include "pathsat/report.hpp"
#include "pathsat/saturation.hpp"
#include "pathsat/symmetry.hpp"

namespace {

using nlohmann::json;
using namespace pathsat;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::string graph;
  std::string symmetry = "auto";
  std::string generators;
  uint64_t budget_nodes = 0;
  double budget_seconds = 0.0;
  int jobs = 1;
  std::string out_dir;
};

void add_search_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--graph,-g", c.graph, "Graph reference (gn:3, kneser:5, ...), file, or - for stdin")
      ->required();
  cmd->add_option("--symmetry", c.symmetry, "Symmetry reduction")
      ->check(CLI::IsMember({"off", "auto", "file"}))
      ->capture_default_str();
  cmd->add_option("--generators", c.generators, "JSON permutation list for --symmetry file");
  cmd->add_option("--budget-nodes", c.budget_nodes, "Search node limit per search (0 = unlimited)");
  cmd->add_option("--budget-seconds", c.budget_seconds, "Wall-clock limit per search (0 = unlimited)");
  cmd->add_option("--jobs,-j", c.jobs, "Worker threads")->envname("PATHSAT_JOBS")->check(CLI::PositiveNumber);
  cmd->add_option("--out", c.out_dir, "Also write the JSON report into this directory");
}

SearchBudget budget_of(const Common& c) { return SearchBudget{c.budget_nodes, c.budget_seconds}; }

void emit(const Common& c, const std::string& kind, const json& report) {
  const std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (!c.out_dir.empty()) std::cerr << "report written to " << cli::persist_report(c.out_dir, kind, text) << "\n";
}

json graph_summary(const GraphRef& ref) {
  return json{{"source", ref.ref}, {"order", ref.graph.order()}, {"edges", ref.graph.edge_count()}};
}

// construct --------------------------------------------------------------

struct ConstructArgs {
  std::string family;
  int n = 0, k = 0, r = 2, d = 0, copies = 1;
  std::string format = "graph6";
  std::string output;
  std::string labels;
};

std::string reference_for(const ConstructArgs& a) {
  auto need = [&](int v, const char* flag) {
    if (v <= 0) throw GraphError(a.family + " requires " + flag);
    return std::to_string(v);
  };
  std::string ref;
  if (a.family == "gn" || a.family == "cycle" || a.family == "path" || a.family == "complete") {
    ref = a.family + ":" + need(a.n, "--n");
  } else if (a.family == "kneser") {
    ref = "kneser:" + need(a.n, "--n") + ":" + need(a.r, "--r");
  } else if (a.family == "gp") {
    ref = "gp:" + need(a.n, "--n") + ":" + need(a.k, "--k");
  } else if (a.family == "qd") {
    ref = "qd:" + need(a.d > 0 ? a.d : a.n, "--d");
  } else {
    ref = a.family;
  }
  if (a.copies != 1) ref += "*" + std::to_string(a.copies);
  return ref;
}

std::string render(const Graph& g, const std::string& format, const std::string& name,
                   const PathCertificate& highlight = {}) {
  if (format == "graph6") return encode_graph6(g) + "\n";
  if (format == "edges") return write_edge_list(g);
  return to_dot(g, name, highlight);
}

json labels_json(const Graph& g) {
  json out = json::object();
  for (Vertex v = 0; v < g.order(); ++v) out[std::to_string(v)] = g.label(v);
  return out;
}

int run_construct(const ConstructArgs& a) {
  const GraphRef ref = resolve_graph(reference_for(a));
  cli::write_output(a.output, render(ref.graph, a.format, a.family));
  std::string sidecar = a.labels;
  if (sidecar.empty() && !a.output.empty() && a.output != "-") sidecar = a.output + ".labels.json";
  if (!sidecar.empty()) cli::write_output(sidecar, labels_json(ref.graph).dump(2) + "\n");
  return kExitOk;
}

// check ------------------------------------------------------------------

int run_check(const Common& c, int k, const std::string& side, bool summary_only) {
  const GraphRef ref = cli::load_graph(c.graph);
  const auto gens = cli::choose_generators(ref, c.symmetry, c.generators);
  SaturationOptions opt;
  opt.base_budget = budget_of(c);
  opt.witness_budget = budget_of(c);
  opt.generators = gens ? &*gens : nullptr;
  opt.jobs = c.jobs;
  const SaturationReport rep = side == "deletion"   ? verify_deletion_side(ref.graph, k, opt)
                               : side == "addition" ? verify_addition_side(ref.graph, k, opt)
                                                    : verify_induced_saturated(ref.graph, k, opt);
  json out = report_envelope("check");
  out["graph"] = graph_summary(ref);
  out["side"] = side;
  out["result"] = to_json(ref.graph, rep, !summary_only);
  emit(c, "check", out);
  return rep.saturated() ? kExitOk : kExitFailed;
}

// longest-path -----------------------------------------------------------

int run_longest(const Common& c, int k, bool connectivity) {
  const GraphRef ref = cli::load_graph(c.graph);
  const auto gens = cli::choose_generators(ref, c.symmetry, c.generators);
  SearchOptions opt;
  opt.budget = budget_of(c);
  opt.generators = gens ? &*gens : nullptr;
  opt.jobs = c.jobs;
  opt.connectivity_bound = connectivity;
  const SearchOutcome outcome = k > 0 ? has_induced_path(ref.graph, k, opt) : longest_induced_path(ref.graph, opt);
  json out = report_envelope("longest_path");
  out["graph"] = graph_summary(ref);
  out["mode"] = k > 0 ? "has_path" : "longest";
  if (k > 0) out["k"] = k;
  out["symmetry_reduced"] = gens.has_value();
  out["length"] = outcome.best ? static_cast<int>(outcome.best->size()) : 0;
  out["outcome"] = to_json(ref.graph, outcome);
  emit(c, "longest-path", out);
  return outcome.status == SearchStatus::kBudgetExceeded ? kExitFailed : kExitOk;
}

// automorphisms ----------------------------------------------------------

int run_automorphisms_gn(const Common& c, int n) {
  const Graph g = build_gn(n);
  const VertexPermutation f = auto_f(n), p = auto_p(n), pinv = auto_p_inv(n), q = auto_q(n), r = auto_r(n);
  const auto id = VertexPermutation::identity(g.order());
  json checks{
      {"f", verify_automorphism(g, f)},
      {"p", verify_automorphism(g, p)},
      {"p_inv", verify_automorphism(g, pinv)},
      {"q", verify_automorphism(g, q)},
      {"r", verify_automorphism(g, r)},
      {"q_q_identity", compose(q, q) == id},
      {"p_inv_p_identity", compose(pinv, p) == id},
      {"r_fixes_00_0", r(gn_index({0, 0, 0}, n)) == gn_index({0, 0, 0}, n)},
      {"r_11_0_to_00_1", r(gn_index({1, 1, 0}, n)) == gn_index({0, 0, 1}, n)},
      {"r_upper_into_lower", check_r_range(n)},
  };
  bool all_ok = true;
  for (const auto& [key, value] : checks.items()) all_ok = all_ok && value.get<bool>();

  json orbit_counts = json::object();
  if (all_ok) {
    const GeneratorSet gens = gn_generators(n);
    for (OrbitDomain d : {OrbitDomain::kVertices, OrbitDomain::kEdges, OrbitDomain::kNonEdges}) {
      orbit_counts[to_string(d)] = orbits(g, gens, d).class_count();
    }
    const GeneratorSet fpq = GeneratorSet::verified(g, {{"f", f}, {"p", p}, {"q", q}});
    orbit_counts["vertices_fpq"] = orbits(g, fpq, OrbitDomain::kVertices).class_count();
  }
  json out = report_envelope("automorphisms");
  out["graph"] = {{"source", "gn:" + std::to_string(n)}, {"order", g.order()}, {"edges", g.edge_count()}};
  out["checks"] = checks;
  out["orbits"] = orbit_counts;
  out["all_ok"] = all_ok;
  emit(c, "automorphisms", out);
  return all_ok ? kExitOk : kExitFailed;
}

int run_automorphisms_file(const Common& c) {
  const GraphRef ref = cli::load_graph(c.graph);
  std::ifstream in(c.generators);
  if (!in) throw FormatError("cannot open generator file '" + c.generators + "'");
  json list;
  try {
    in >> list;
  } catch (const json::exception& e) {
    throw FormatError(std::string("generator file is not JSON: ") + e.what());
  }
  if (!list.is_array()) throw FormatError("generator file must hold a JSON array");
  json results = json::array();
  bool all_ok = true;
  for (size_t i = 0; i < list.size(); ++i) {
    const json& item = list[i];
    const std::string name = item.is_object() ? item.value("name", "g" + std::to_string(i)) : "g" + std::to_string(i);
    const auto image = (item.is_object() ? item.at("image") : item).get<std::vector<Vertex>>();
    bool ok = false;
    std::string error;
    try {
      ok = verify_automorphism(ref.graph, VertexPermutation(image));
    } catch (const GraphError& e) {
      error = e.what();
    }
    all_ok = all_ok && ok;
    json r{{"name", name}, {"automorphism", ok}};
    if (!error.empty()) r["error"] = error;
    results.push_back(std::move(r));
  }
  json out = report_envelope("automorphisms");
  out["graph"] = graph_summary(ref);
  out["generators"] = results;
  out["all_ok"] = all_ok;
  emit(c, "automorphisms", out);
  return all_ok ? kExitOk : kExitFailed;
}

// orbits -----------------------------------------------------------------

int run_orbits(const Common& c, const std::string& domain) {
  const GraphRef ref = cli::load_graph(c.graph);
  const auto gens = cli::choose_generators(ref, c.symmetry, c.generators);
  const GeneratorSet none = GeneratorSet::verified(ref.graph, {});
  const GeneratorSet& use = gens ? *gens : none;
  const OrbitDomain d = domain == "vertices" ? OrbitDomain::kVertices
                        : domain == "edges"  ? OrbitDomain::kEdges
                                             : OrbitDomain::kNonEdges;
  json out = report_envelope("orbits");
  out["graph"] = graph_summary(ref);
  out["generators"] = use.names();
  out["partition"] = to_json(orbits(ref.graph, use, d));
  emit(c, "orbits", out);
  return kExitOk;
}

// export -----------------------------------------------------------------

PathCertificate parse_vertex_list(const std::string& text) {
  PathCertificate out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw GraphError("bad vertex '" + item + "' in --highlight");
    }
  }
  return out;
}

int run_export(const std::string& graph, const std::string& format, const std::string& output,
               const std::string& highlight, const std::string& labels) {
  const GraphRef ref = cli::load_graph(graph);
  const PathCertificate path = parse_vertex_list(highlight);
  for (Vertex v : path) {
    if (v < 0 || v >= ref.graph.order()) throw GraphError("--highlight vertex out of range");
  }
  cli::write_output(output, render(ref.graph, format, "G", path));
  if (!labels.empty()) cli::write_output(labels, labels_json(ref.graph).dump(2) + "\n");
  return kExitOk;
}

// paper-suite ------------------------------------------------------------

json fixtures_json() {
  json out = report_envelope("fixtures");
  json items = json::array();
  for (int n = 2; n <= 8; ++n) {
    const Graph g = build_gn(n);
    for (DeletionCase dc : {DeletionCase::kW01Zero, DeletionCase::kW00Last}) {
      json item = to_json(g, deletion_fixture(n, dc));
      item["graph"] = "gn:" + std::to_string(n);
      items.push_back(std::move(item));
    }
  }
  for (int n = 5; n <= 7; ++n) {
    const Graph g = build_kneser(n);
    for (const Fixture& f : kneser_p6_fixtures(n)) {
      json item = to_json(g, f);
      item["graph"] = "kneser:" + std::to_string(n);
      items.push_back(std::move(item));
    }
  }
  json canonical = json::array();
  for (int n = 2; n <= 10; ++n) {
    canonical.push_back({{"graph", "gn:" + std::to_string(n)},
                         {"certificate", certificate_json(build_gn(n), canonical_long_path(n))}});
  }
  out["fixtures"] = std::move(items);
  out["canonical_paths"] = std::move(canonical);
  return out;
}

int run_suite(const Common& c, const std::string& tier, const std::string& claims_file, const std::string& fixtures,
              bool list_only) {
  std::vector<ClaimSpec> claims;
  if (claims_file.empty()) {
    claims = builtin_claims();
  } else {
    std::ifstream in(claims_file);
    if (!in) throw FormatError("cannot open claims file '" + claims_file + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw FormatError(std::string("claims file is not JSON: ") + e.what());
    }
    claims = claims_from_json(j);
  }
  if (tier != "all") {
    const Tier t = parse_tier(tier);
    std::erase_if(claims, [t](const ClaimSpec& s) { return s.tier != t; });
  }
  if (!fixtures.empty()) cli::write_output(fixtures, fixtures_json().dump(2) + "\n");
  if (list_only) {
    std::cout << claims_to_json(claims).dump(2) << "\n";
    return kExitOk;
  }
  RunReport report;
  report.config_hash = config_hash(claims, c.jobs);
  for (const auto& claim : claims) {
    report.results.push_back(run_claim(claim, c.jobs));
    const auto& r = report.results.back();
    report.seconds += r.seconds;
    std::cerr << to_string(r.verdict) << "  " << claim.id << "  (" << r.detail << ", " << r.seconds << " s)\n";
  }
  json out = report.to_json();
  out["tier"] = tier;
  emit(c, "paper-suite", out);
  return report.all_confirmed() ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Induced-path saturation toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version()));

  ConstructArgs construct;
  auto* cmd_construct = app.add_subcommand("construct", "Build a graph family and print it");
  cmd_construct->add_option("family", construct.family, "Graph family")
      ->required()
      ->check(CLI::IsMember({"gn", "kneser", "gp", "qd", "heawood", "coxeter", "dyck", "raty", "petersen",
                             "cycle", "path", "complete"}));
  cmd_construct->add_option("--n", construct.n, "Size parameter");
  cmd_construct->add_option("--k", construct.k, "Generalized Petersen step");
  cmd_construct->add_option("--r", construct.r, "Kneser subset size")->capture_default_str();
  cmd_construct->add_option("--d", construct.d, "Hypercube dimension");
  cmd_construct->add_option("--copies", construct.copies, "Disjoint copies")->check(CLI::PositiveNumber);
  cmd_construct->add_option("--format,-f", construct.format, "Output format")
      ->check(CLI::IsMember({"graph6", "dot", "edges"}))
      ->capture_default_str();
  cmd_construct->add_option("--output,-o", construct.output, "Output file (default stdout)");
  cmd_construct->add_option("--labels", construct.labels, "Vertex label sidecar JSON");

  Common check_args;
  int check_k = 0;
  std::string side = "both";
  bool summary_only = false;
  auto* cmd_check = app.add_subcommand("check", "Verify P_k-induced-saturation");
  add_search_flags(cmd_check, check_args);
  cmd_check->add_option("--k,-k", check_k, "Path order")->required()->check(CLI::Range(2, kMaxOrder));
  cmd_check->add_option("--side", side, "Perturbations to sweep")
      ->check(CLI::IsMember({"both", "deletion", "addition"}))
      ->capture_default_str();
  cmd_check->add_flag("--summary-only", summary_only, "Omit per-pair verdicts");

  Common longest_args;
  int longest_k = 0;
  bool connectivity = false;
  auto* cmd_longest = app.add_subcommand("longest-path", "Longest induced path, or test for an induced P_k");
  add_search_flags(cmd_longest, longest_args);
  cmd_longest->add_option("--k,-k", longest_k, "Only decide whether an induced P_k exists")
      ->check(CLI::Range(1, kMaxOrder));
  cmd_longest->add_flag("--connectivity-bound", connectivity, "Prune on reachable usable vertices");

  Common auto_args;
  int auto_n = 0;
  auto* cmd_auto = app.add_subcommand("automorphisms", "Verify f, p, p^-1, q, r on G_n, or a generator file");
  cmd_auto->add_option("--n", auto_n, "G_n parameter")->check(CLI::Range(2, kMaxOrder / 8));
  cmd_auto->add_option("--graph,-g", auto_args.graph, "Graph for --generators");
  cmd_auto->add_option("--generators", auto_args.generators, "JSON permutation list to verify");
  cmd_auto->add_option("--out", auto_args.out_dir, "Also write the JSON report into this directory");

  Common orbit_args;
  std::string domain = "vertices";
  auto* cmd_orbits = app.add_subcommand("orbits", "Orbit partition under the chosen generators");
  add_search_flags(cmd_orbits, orbit_args);
  cmd_orbits->add_option("--domain", domain, "What to partition")
      ->check(CLI::IsMember({"vertices", "edges", "nonedges"}))
      ->capture_default_str();

  std::string export_graph, export_format = "dot", export_output, highlight, export_labels;
  auto* cmd_export = app.add_subcommand("export", "Convert a graph between formats");
  cmd_export->add_option("--graph,-g", export_graph, "Graph reference, file, or -")->required();
  cmd_export->add_option("--format,-f", export_format, "Output format")
      ->check(CLI::IsMember({"graph6", "dot", "edges"}))
      ->capture_default_str();
  cmd_export->add_option("--output,-o", export_output, "Output file (default stdout)");
  cmd_export->add_option("--highlight", highlight, "Comma-separated path highlighted in DOT output");
  cmd_export->add_option("--labels", export_labels, "Vertex label sidecar JSON");

  Common suite_args;
  std::string tier = "core", claims_file, fixtures_file;
  bool list_only = false;
  auto* cmd_suite = app.add_subcommand("paper-suite", "Run the built-in claim table");
  cmd_suite->add_option("--tier", tier, "Claims to run")
      ->check(CLI::IsMember({"core", "extended", "stretch", "all"}))
      ->capture_default_str();
  cmd_suite->add_option("--claims", claims_file, "JSON claim table replacing the built-in one");
  cmd_suite->add_option("--emit-fixtures", fixtures_file, "Write certificate fixtures as JSON");
  cmd_suite->add_option("--jobs,-j", suite_args.jobs, "Worker threads")
      ->envname("PATHSAT_JOBS")
      ->check(CLI::PositiveNumber);
  cmd_suite->add_option("--out", suite_args.out_dir, "Also write the JSON report into this directory");
  cmd_suite->add_flag("--list", list_only, "Print the selected claims and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cmd_construct) return run_construct(construct);
    if (*cmd_check) return run_check(check_args, check_k, side, summary_only);
    if (*cmd_longest) return run_longest(longest_args, longest_k, connectivity);
    if (*cmd_auto) {
      if (auto_n > 0) return run_automorphisms_gn(auto_args, auto_n);
      if (auto_args.graph.empty() || auto_args.generators.empty()) {
        std::cerr << "automorphisms: give --n, or --graph with --generators\n";
        return kExitUsage;
      }
      return run_automorphisms_file(auto_args);
    }
    if (*cmd_orbits) return run_orbits(orbit_args, domain);
    if (*cmd_export) return run_export(export_graph, export_format, export_output, highlight, export_labels);
    if (*cmd_suite) return run_suite(suite_args, tier, claims_file, fixtures_file, list_only);
  } catch (const SymmetryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}
