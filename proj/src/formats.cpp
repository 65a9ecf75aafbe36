#include "pathsat/formats.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

namespace pathsat {

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph decode_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw FormatError("empty graph6 string");
  for (char ch : text) {
    if (ch < 63 || ch > 126) throw FormatError("graph6: byte outside 63..126");
  }
  int n = text[0] - 63;
  size_t header = 1;
  if (n == 63) {
    if (text.size() < 4 || text[1] == '~') throw FormatError("graph6: unsupported size header");
    n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    header = 4;
    if (n <= 62) throw FormatError("graph6: long size header used for a small order");
  }
  if (n < 1) throw FormatError("graph6: graph must have at least one vertex");
  if (n > kMaxOrder) throw FormatError("graph6: order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  const long bits = static_cast<long>(n) * (n - 1) / 2;
  const long groups = (bits + 5) / 6;
  if (static_cast<long>(text.size()) != static_cast<long>(header) + groups) {
    throw FormatError("graph6: expected " + std::to_string(header + groups) + " bytes, got " +
                      std::to_string(text.size()));
  }
  text.remove_prefix(header - 1);
  GraphBuilder b(n);
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const int byte = text[1 + k / 6] - 63;
    if (byte & ((1 << (6 - k % 6)) - 1)) throw FormatError("graph6: nonzero padding bits");
  }
  return b.build();
}

Graph read_edge_list(std::istream& in) {
  std::vector<VertexPair> edges;
  int declared = -1;
  int max_index = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first[0] == '#') {
      std::string key;
      int value;
      std::istringstream cs(line.substr(line.find('#') + 1));
      if (cs >> key && key == "order" && cs >> value) declared = value;
      continue;
    }
    int u, v;
    std::istringstream ps(line);
    std::string rest;
    if (!(ps >> u >> v) || (ps >> rest && rest[0] != '#')) {
      throw FormatError("edge list line " + std::to_string(line_no) + ": expected 'u v'");
    }
    if (u < 0 || v < 0) throw FormatError("edge list line " + std::to_string(line_no) + ": negative index");
    edges.emplace_back(u, v);
    max_index = std::max({max_index, u, v});
  }
  const int order = declared >= 0 ? declared : max_index + 1;
  if (order < 1) throw FormatError("edge list: no vertices");
  if (max_index >= order) throw FormatError("edge list: index exceeds declared order");
  try {
    GraphBuilder b(order);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
  } catch (const GraphError& e) {
    throw FormatError(std::string("edge list: ") + e.what());
  }
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# order " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string to_dot(const Graph& g, std::string_view name, std::span<const Vertex> highlight) {
  std::ostringstream out;
  out << "graph \"" << dot_escape(std::string(name)) << "\" {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v << " [label=\"" << dot_escape(g.label(v)) << "\"];\n";
  }
  auto on_path = [&](Vertex u, Vertex v) {
    for (size_t i = 0; i + 1 < highlight.size(); ++i) {
      if ((highlight[i] == u && highlight[i + 1] == v) ||
          (highlight[i] == v && highlight[i + 1] == u)) {
        return true;
      }
    }
    return false;
  };
  for (auto [u, v] : g.edges()) {
    out << "  " << u << " -- " << v;
    if (on_path(u, v)) out << " [penwidth=3, color=red]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace pathsat
