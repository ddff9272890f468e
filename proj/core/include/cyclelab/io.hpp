#pragma once

#include <span>
#include <string>
#include <vector>

#include "cyclelab/graph.hpp"

namespace cyclelab {

/// Whitespace edge list, one "u v" per line, '#' starts a comment.
Graph parse_edge_list(const std::string& text);

/// {"n": int, "edges": [[u,v],...]}
Graph parse_graph_json(const std::string& text);

std::string graph_to_json(const Graph& g);

/// Reads a file, dispatching on a leading '{' to JSON, else edge list.
Graph load_graph_file(const std::string& path);

/// Vertex groups rendered in a shared color, for witness overlays.
struct DotOverlay {
  std::string name;
  std::string color;
  VertexSet vertices;
};

std::string graph_to_dot(const Graph& g, std::span<const DotOverlay> overlays = {},
                         std::span<const Path> highlighted_paths = {});

}  // namespace cyclelab
