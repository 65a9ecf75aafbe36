#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pathsat/graph.hpp"

namespace pathsat {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Orders up to 62 use the one-byte size header; larger orders (up to
// kMaxOrder) use '~' followed by three bytes.
std::string encode_graph6(const Graph& g);
// Accepts an optional ">>graph6<<" prefix and trailing whitespace. Throws
// FormatError on anything else that is not a well-formed graph6 string.
Graph decode_graph6(std::string_view text);

// Newline-delimited "u v" pairs, 0-based. Blank lines and '#' comments are
// ignored, except "# order N", which fixes the vertex count (otherwise it is
// one more than the largest index seen).
Graph read_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

// Graphviz DOT with vertex labels. Edges of `highlight` are drawn thick and red.
std::string to_dot(const Graph& g, std::string_view name = "G",
                   std::span<const Vertex> highlight = {});

}  // namespace pathsat
