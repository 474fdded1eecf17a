#include "antwalk/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "antwalk/errors.hpp"

namespace antwalk {
namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

}  // namespace

Graph parse_graph_text(std::string_view text) {
  std::map<std::string, VertexId, std::less<>> ids;
  std::vector<std::string> names;
  std::map<EdgeId, std::pair<std::string, std::string>> raw_edges;
  std::map<EdgeId, std::size_t> edge_offsets;
  std::optional<std::string> nest, food;
  std::size_t nest_offset = 0, food_offset = 0;

  std::size_t offset = 0;
  while (offset <= text.size()) {
    const std::size_t end = std::min(text.find('\n', offset), text.size());
    std::string_view line = text.substr(offset, end - offset);
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const auto words = split_words(line);
    const std::size_t line_offset = offset;
    offset = end + 1;
    if (words.empty()) continue;

    auto fail = [line_offset](const std::string& what) -> void {
      throw SyntaxError("graph text: " + what, line_offset);
    };
    const std::string_view keyword = words[0];
    if (keyword == "vertex") {
      if (words.size() != 2) fail("expected 'vertex <name>'");
      const std::string name(words[1]);
      if (ids.count(name)) fail("duplicate vertex '" + name + "'");
      ids.emplace(name, static_cast<VertexId>(names.size()));
      names.push_back(name);
    } else if (keyword == "edge") {
      if (words.size() != 4) fail("expected 'edge <id> <u> <v>'");
      EdgeId id = 0;
      const auto [p, ec] = std::from_chars(words[1].data(), words[1].data() + words[1].size(), id);
      if (ec != std::errc{} || p != words[1].data() + words[1].size())
        fail("edge id must be a non-negative integer");
      if (raw_edges.count(id)) fail("duplicate edge id " + std::to_string(id));
      raw_edges.emplace(id, std::pair{std::string(words[2]), std::string(words[3])});
      edge_offsets.emplace(id, line_offset);
    } else if (keyword == "nest" || keyword == "food") {
      if (words.size() != 2) fail("expected '" + std::string(keyword) + " <name>'");
      auto& slot = keyword == "nest" ? nest : food;
      if (slot) fail("duplicate '" + std::string(keyword) + "' line");
      slot = std::string(words[1]);
      (keyword == "nest" ? nest_offset : food_offset) = line_offset;
    } else {
      fail("unknown keyword '" + std::string(keyword) + "'");
    }
  }

  if (!nest) throw SyntaxError("graph text: missing 'nest' line", text.size());
  if (!food) throw SyntaxError("graph text: missing 'food' line", text.size());
  auto lookup = [&ids](const std::string& name, std::size_t at) {
    const auto it = ids.find(name);
    if (it == ids.end()) throw SyntaxError("graph text: undeclared vertex '" + name + "'", at);
    return it->second;
  };

  std::vector<Endpoints> edges;
  edges.reserve(raw_edges.size());
  EdgeId expected = 0;
  for (const auto& [id, ends] : raw_edges) {
    if (id != expected)
      throw GraphError("graph text: edge ids must be dense, missing id " +
                       std::to_string(expected));
    const std::size_t at = edge_offsets.at(id);
    edges.push_back({lookup(ends.first, at), lookup(ends.second, at)});
    ++expected;
  }
  const VertexId n = lookup(*nest, nest_offset);
  const VertexId f = lookup(*food, food_offset);
  const std::size_t count = names.size();
  return Graph(count, std::move(edges), n, f, std::move(names));
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open graph file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_text(buffer.str());
}

std::string format_graph_text(const Graph& graph) {
  std::ostringstream out;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) out << "vertex " << graph.vertex_name(v) << '\n';
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const auto& ends = graph.endpoints(e);
    out << "edge " << e << ' ' << graph.vertex_name(ends.u) << ' ' << graph.vertex_name(ends.v)
        << '\n';
  }
  out << "nest " << graph.vertex_name(graph.nest()) << '\n';
  out << "food " << graph.vertex_name(graph.food()) << '\n';
  return out.str();
}

}  // namespace antwalk
