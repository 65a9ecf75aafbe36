#pragma once

#include <optional>
#include <string>

#include "pathsat/claims.hpp"
#include "pathsat/graph.hpp"
#include "pathsat/symmetry.hpp"

namespace pathsat::cli {

// "-" reads stdin, an existing path reads a file, anything else is a graph
// reference (see resolve_graph). Files hold graph6 or an edge list; the
// format is sniffed from the first non-blank line.
GraphRef load_graph(const std::string& source);

// JSON array of permutations, each either a bare image array or
// {"name": ..., "image": [...]}. Verified against g.
GeneratorSet load_generators(const Graph& g, const std::string& path);

// off: none; auto: constructor generators if the source had them;
// file: load_generators(generators_path).
std::optional<GeneratorSet> choose_generators(const GraphRef& ref, const std::string& mode,
                                              const std::string& generators_path);

// Writes `text` to `path`, or stdout when path is empty or "-".
void write_output(const std::string& path, const std::string& text);

// Writes a report as <dir>/<kind>-<UTC timestamp>.json and returns the path.
std::string persist_report(const std::string& dir, const std::string& kind, const std::string& text);

}  // namespace pathsat::cli
