#include "mstv/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

#include "mstv/error.hpp"

namespace mstv {
namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next non-blank line split into whitespace-separated tokens.
  bool next(std::vector<std::string_view>& tokens) {
    while (pos_ < text_.size()) {
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_no_;
      tokens.clear();
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
      }
      if (!tokens.empty()) return true;
    }
    return false;
  }

  std::size_t line_no() const noexcept { return line_no_; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no_) + ": " + msg);
  }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

template <typename T>
T parse_number(const LineReader& reader, std::string_view token, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    reader.fail(std::string("invalid ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph load_graph(std::string_view text) {
  LineReader reader(text);
  std::vector<std::string_view> tok;
  if (!reader.next(tok)) throw Error(ErrorKind::ParseError, "empty graph file");
  if (tok.size() != 2) reader.fail("expected header 'n m'");
  const auto n = parse_number<std::uint64_t>(reader, tok[0], "vertex count");
  const auto m = parse_number<std::uint64_t>(reader, tok[1], "edge count");

  std::vector<Graph::RawEdge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!reader.next(tok)) {
      throw Error(ErrorKind::ParseError, "expected " + std::to_string(m) + " edges, found " +
                                             std::to_string(i));
    }
    if (tok.size() != 3) reader.fail("expected 'u v w'");
    const auto u = parse_number<VertexId>(reader, tok[0], "vertex");
    const auto v = parse_number<VertexId>(reader, tok[1], "vertex");
    const auto w = parse_number<double>(reader, tok[2], "weight");
    edges.push_back({u, v, w});
  }
  if (reader.next(tok)) reader.fail("unexpected trailing content");
  return Graph::create(n, edges);
}

SpanningTree load_tree(std::string_view text, const Graph& g) {
  LineReader reader(text);
  std::vector<std::string_view> tok;
  if (!reader.next(tok)) throw Error(ErrorKind::ParseError, "empty tree file");
  if (tok.size() != 1 || (tok[0] != "pairs" && tok[0] != "indices")) {
    reader.fail("expected header 'pairs' or 'indices'");
  }
  const bool pairs = tok[0] == "pairs";

  std::vector<EdgeId> ids;
  while (reader.next(tok)) {
    if (pairs) {
      if (tok.size() != 2) reader.fail("expected 'u v'");
      const auto a = parse_number<VertexId>(reader, tok[0], "vertex");
      const auto b = parse_number<VertexId>(reader, tok[1], "vertex");
      auto id = g.find_edge(a, b);
      if (!id) {
        throw Error(ErrorKind::NotInGraph, "pair (" + std::to_string(a) + ", " + std::to_string(b) +
                                               ") is not an edge of the graph");
      }
      ids.push_back(*id);
    } else {
      if (tok.size() != 1) reader.fail("expected a single edge index");
      const auto i = parse_number<std::uint64_t>(reader, tok[0], "edge index");
      if (i >= g.edge_count()) {
        throw Error(ErrorKind::NotInGraph, "edge index " + std::to_string(i) + " is not in the graph");
      }
      ids.push_back(static_cast<EdgeId>(i));
    }
  }
  return SpanningTree::create(g, std::move(ids));
}

std::string format_weight(Weight w) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, w);
  return std::string(buf, ptr);
}

std::string serialize_graph(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += ' ';
    out += format_weight(e.w);
    out += '\n';
  }
  return out;
}

std::string serialize_tree_indices(const SpanningTree& t) {
  std::string out = "indices\n";
  for (EdgeId id : t.sorted_ids()) out += std::to_string(id) + "\n";
  return out;
}

std::string serialize_tree_pairs(const Graph& g, const SpanningTree& t) {
  std::string out = "pairs\n";
  for (EdgeId id : t.sorted_ids()) {
    const Edge& e = g.edge(id);
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace mstv
