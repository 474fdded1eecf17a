#include "antwalk/sp_expression.hpp"

#include <algorithm>
#include <cctype>

#include "antwalk/errors.hpp"

namespace antwalk {

SpExpression SpExpression::base() {
  SpExpression expr;
  expr.nodes_.push_back({Kind::Base, 0, 0});
  return expr;
}

SpExpression SpExpression::combine(Kind kind, const SpExpression& a,
                                   const SpExpression& b) {
  SpExpression expr;
  expr.nodes_.reserve(a.nodes_.size() + b.nodes_.size() + 1);
  expr.nodes_ = a.nodes_;
  const auto offset = static_cast<std::uint32_t>(a.nodes_.size());
  for (Node n : b.nodes_) {
    if (n.kind != Kind::Base) {
      n.left += offset;
      n.right += offset;
    }
    expr.nodes_.push_back(n);
  }
  expr.nodes_.push_back({kind, a.root(), static_cast<std::uint32_t>(expr.nodes_.size() - 1)});
  return expr;
}

SpExpression SpExpression::series(const SpExpression& first, const SpExpression& second) {
  return combine(Kind::Series, first, second);
}

SpExpression SpExpression::parallel(const SpExpression& first, const SpExpression& second) {
  return combine(Kind::Parallel, first, second);
}

std::size_t SpExpression::leaf_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      nodes_.begin(), nodes_.end(), [](const Node& n) { return n.kind == Kind::Base; }));
}

std::size_t SpExpression::depth() const {
  std::vector<std::size_t> d(nodes_.size(), 0);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    if (n.kind != Kind::Base) d[i] = 1 + std::max(d[n.left], d[n.right]);
  }
  return d.back();
}

std::string SpExpression::render() const {
  std::vector<std::string> text(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    switch (n.kind) {
      case Kind::Base:
        text[i] = "e";
        break;
      case Kind::Series:
      case Kind::Parallel:
        text[i] = std::string(n.kind == Kind::Series ? "S(" : "P(") + text[n.left] +
                  "," + text[n.right] + ")";
        text[n.left].clear();
        text[n.right].clear();
        break;
    }
  }
  return text.back();
}

namespace {

class SpParser {
 public:
  explicit SpParser(std::string_view text) : text_(text) {}

  SpExpression parse() {
    SpExpression expr = expression(0);
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return expr;
  }

 private:
  static constexpr std::size_t kMaxDepth = 4096;

  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError("SP grammar: " + what, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but input ended");
    if (text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  SpExpression expression(std::size_t depth) {
    if (depth > kMaxDepth) fail("nesting too deep");
    skip_space();
    if (pos_ >= text_.size()) fail("expected expression but input ended");
    const char c = text_[pos_];
    if (c == 'e') {
      ++pos_;
      return SpExpression::base();
    }
    if (c != 'S' && c != 'P') fail("expected 'e', 'S(' or 'P('");
    ++pos_;
    expect('(');
    SpExpression first = expression(depth + 1);
    expect(',');
    SpExpression second = expression(depth + 1);
    expect(')');
    return c == 'S' ? SpExpression::series(first, second)
                    : SpExpression::parallel(first, second);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SpExpression parse_sp(std::string_view text) { return SpParser(text).parse(); }

Graph sp_to_graph(const SpExpression& expr) {
  std::vector<Endpoints> edges;
  edges.reserve(expr.leaf_count());
  std::vector<std::string> names{"N", "F"};
  VertexId next_vertex = 2;

  // Explicit stack of (node, source, sink); the right child is pushed first so
  // leaves are emitted left to right.
  struct Frame {
    std::uint32_t node;
    VertexId source;
    VertexId sink;
  };
  std::vector<Frame> stack{{expr.root(), 0, 1}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    const auto& n = expr.node(f.node);
    switch (n.kind) {
      case SpExpression::Kind::Base:
        edges.push_back({f.source, f.sink});
        break;
      case SpExpression::Kind::Parallel:
        stack.push_back({n.right, f.source, f.sink});
        stack.push_back({n.left, f.source, f.sink});
        break;
      case SpExpression::Kind::Series: {
        const VertexId mid = next_vertex++;
        names.push_back("v" + std::to_string(mid));
        stack.push_back({n.right, mid, f.sink});
        stack.push_back({n.left, f.source, mid});
        break;
      }
    }
  }
  return Graph(next_vertex, std::move(edges), 0, 1, std::move(names));
}

}  // namespace antwalk
