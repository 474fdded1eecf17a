#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "antwalk/graph.hpp"

namespace antwalk {

/// Series-parallel construction term: Base | Series(a, b) | Parallel(a, b).
///
/// Stored as a post-order node array (children precede their parent, the root
/// is the last node), so two expressions are structurally equal exactly when
/// their node arrays are equal. Base leaves are numbered left to right; leaf k
/// becomes edge k of sp_to_graph().
class SpExpression {
 public:
  enum class Kind : std::uint8_t { Base, Series, Parallel };

  struct Node {
    Kind kind;
    std::uint32_t left;   // child node index, unused for Base
    std::uint32_t right;  // child node index, unused for Base

    bool operator==(const Node&) const = default;
  };

  static SpExpression base();
  static SpExpression series(const SpExpression& first, const SpExpression& second);
  static SpExpression parallel(const SpExpression& first, const SpExpression& second);

  std::span<const Node> nodes() const noexcept { return nodes_; }
  std::uint32_t root() const noexcept { return static_cast<std::uint32_t>(nodes_.size() - 1); }
  const Node& node(std::uint32_t index) const { return nodes_.at(index); }

  std::size_t leaf_count() const noexcept;
  std::size_t depth() const;

  /// Canonical text form: no whitespace, e.g. "P(S(e,e),e)".
  std::string render() const;

  bool operator==(const SpExpression&) const = default;

 private:
  SpExpression() = default;
  static SpExpression combine(Kind kind, const SpExpression& a, const SpExpression& b);

  std::vector<Node> nodes_;
};

/// Parses `expr := "e" | "S(" expr "," expr ")" | "P(" expr "," expr ")"`,
/// ignoring whitespace. Throws SyntaxError carrying the byte offset of the
/// first unexpected character (or of the end of input).
SpExpression parse_sp(std::string_view text);

/// Flattens the term: series merges sink of the first operand with source of
/// the second, parallel merges both sources and both sinks. The nest is the
/// overall source (vertex 0, "N"), the food the overall sink (vertex 1, "F").
Graph sp_to_graph(const SpExpression& expr);

}  // namespace antwalk
