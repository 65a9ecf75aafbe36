#include "graph_input.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "pathsat/formats.hpp"

namespace pathsat::cli {

namespace {

bool looks_like_graph6(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.rfind(">>graph6<<", 0) == 0) return true;
    if (line[0] == '#') return false;
    return line.find_first_of(" \t") == std::string::npos;
  }
  return false;
}

Graph parse_graph_text(const std::string& text) {
  if (looks_like_graph6(text)) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) return decode_graph6(line);
    }
  }
  std::istringstream in(text);
  return read_edge_list(in);
}

}  // namespace

GraphRef load_graph(const std::string& source) {
  GraphRef out;
  out.ref = source;
  if (source == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    out.graph = parse_graph_text(buf.str());
    return out;
  }
  if (std::filesystem::is_regular_file(source)) {
    std::ifstream in(source);
    std::ostringstream buf;
    buf << in.rdbuf();
    out.graph = parse_graph_text(buf.str());
    return out;
  }
  return resolve_graph(source);
}

GeneratorSet load_generators(const Graph& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open generator file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("generator file is not JSON: " + std::string(e.what()));
  }
  if (!j.is_array()) throw FormatError("generator file must hold a JSON array");
  std::vector<NamedPermutation> gens;
  for (size_t i = 0; i < j.size(); ++i) {
    const auto& item = j[i];
    std::string name = "g" + std::to_string(i);
    nlohmann::json image = item;
    if (item.is_object()) {
      name = item.value("name", name);
      image = item.at("image");
    }
    gens.push_back({name, VertexPermutation(image.get<std::vector<Vertex>>())});
  }
  return GeneratorSet::verified(g, std::move(gens));
}

std::optional<GeneratorSet> choose_generators(const GraphRef& ref, const std::string& mode,
                                              const std::string& generators_path) {
  if (mode == "off") return std::nullopt;
  if (mode == "auto") return ref.generators;
  if (generators_path.empty()) throw GraphError("--symmetry file requires --generators");
  return load_generators(ref.graph, generators_path);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << text;
}

std::string persist_report(const std::string& dir, const std::string& kind, const std::string& text) {
  std::filesystem::create_directories(dir);
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
  std::tm tm{};
  gmtime_r(&t, &tm);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y%m%dT%H%M%S", &tm);
  char millis[8];
  std::snprintf(millis, sizeof millis, "%03d", static_cast<int>(ms));
  const std::string path = (std::filesystem::path(dir) / (kind + "-" + stamp + millis + "Z.json")).string();
  write_output(path, text);
  return path;
}

}  // namespace pathsat::cli
