#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "antwalk/graph.hpp"

namespace antwalk {

/// Line-oriented graph text:
///
///     # comment
///     vertex <name>
///     edge <id> <u> <v>
///     nest <name>
///     food <name>
///
/// Vertex names are opaque tokens. Edge ids must be exactly 0..|E|-1 (in any
/// order). Errors throw SyntaxError with the byte offset of the offending
/// line, or GraphError for structural problems.
Graph parse_graph_text(std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);

/// Inverse of parse_graph_text; edges in id order.
std::string format_graph_text(const Graph& graph);

}  // namespace antwalk
