#include "cyclelab/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cyclelab {

Graph parse_edge_list(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long long u, v;
    if (!(fields >> u)) continue;  // blank or comment-only line
    if (!(fields >> v)) throw DomainError("edge line with a single endpoint: '" + line + "'");
    long long extra;
    if (fields >> extra) throw DomainError("edge line with more than two fields: '" + line + "'");
    if (u < 0 || v < 0) throw DomainError("negative vertex label in edge list");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph::from_edges(edges);
}

Graph parse_graph_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad graph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    throw DomainError("graph JSON requires fields 'n' and 'edges'");
  }
  int n = doc["n"].get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2) throw DomainError("graph JSON edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph::from_edges(n, edges);
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json doc;
  doc["n"] = g.order();
  auto edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.label(u), g.label(v)});
  doc["edges"] = edges;
  return doc.dump();
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open graph file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw DomainError("empty graph file: " + path);
  if (text[first] == '{') return parse_graph_json(text);
  return parse_edge_list(text);
}

std::string graph_to_dot(const Graph& g, std::span<const DotOverlay> overlays,
                         std::span<const Path> highlighted_paths) {
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle];\n";
  for (const auto& ov : overlays) {
    for (int v : ov.vertices) {
      out << "  " << g.label(v) << " [style=filled, fillcolor=\"" << ov.color
          << "\", tooltip=\"" << ov.name << "\"];\n";
    }
  }
  std::vector<std::vector<char>> on_path;
  for (const auto& p : highlighted_paths) {
    std::vector<char> edge_mark(g.order() * (std::size_t)g.order(), 0);
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
      int a = p.vertices[i];
      int b = p.vertices[i + 1];
      edge_mark[(std::size_t)std::min(a, b) * g.order() + std::max(a, b)] = 1;
    }
    on_path.push_back(std::move(edge_mark));
  }
  for (auto [u, v] : g.edges()) {
    bool bold = false;
    for (const auto& marks : on_path) {
      if (marks[(std::size_t)u * g.order() + v]) bold = true;
    }
    out << "  " << g.label(u) << " -- " << g.label(v);
    if (bold) out << " [penwidth=3, color=red]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cyclelab
