#pragma once

#include <cctype>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sumperfect/graph.hpp"

namespace sumperfect {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {
inline constexpr int kGraph6Bias = 63;
inline constexpr std::string_view kGraph6Header = ">>graph6<<";
}  // namespace detail

/// Decodes one graph6 line (optional `>>graph6<<` prefix, trailing whitespace ignored).
inline Graph parse_graph6(std::string_view text) {
  if (text.starts_with(detail::kGraph6Header)) text.remove_prefix(detail::kGraph6Header.size());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char c : text)
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside printable range");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = text[0] - detail::kGraph6Bias;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') throw ParseError("graph6: order exceeds 64");
    if (text.size() < 4) throw ParseError("graph6: truncated order header");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (text[i] - detail::kGraph6Bias);
    pos = 4;
  }
  if (n > kMaxVertices) throw ParseError("graph6: order " + std::to_string(n) + " exceeds 64");

  const long nbits = n * (n - 1) / 2;
  const std::size_t nchars = static_cast<std::size_t>((nbits + 5) / 6);
  if (text.size() - pos < nchars) throw ParseError("graph6: truncated bit payload");
  if (text.size() - pos > nchars) throw ParseError("graph6: trailing bytes after payload");

  std::vector<Edge> edges;
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = text[pos + k / 6] - detail::kGraph6Bias;
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (k % 6 != 0) {
    const int chunk = text[pos + k / 6] - detail::kGraph6Bias;
    if (chunk & ((1 << (6 - k % 6)) - 1)) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

/// Short-form graph6 encoding; orders above 62 are rejected.
inline std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw std::length_error("graph6 short form supports at most 62 vertices");
  std::string out;
  out.reserve(1 + (n * (n - 1) / 2 + 5) / 6);
  out.push_back(static_cast<char>(n + detail::kGraph6Bias));
  int acc = 0, fill = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++fill == 6) {
        out.push_back(static_cast<char>(acc + detail::kGraph6Bias));
        acc = fill = 0;
      }
    }
  }
  if (fill) out.push_back(static_cast<char>((acc << (6 - fill)) + detail::kGraph6Bias));
  return out;
}

/// Edge-list text: first line `n`, then one `u v` pair per line (0-indexed).
inline std::string emit_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<int> n;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long a = 0, b = 0;
    if (!(ls >> a)) continue;
    if (!n) {
      if (a < 0 || a > kMaxVertices) throw ParseError("edge list: order " + std::to_string(a) + " outside [0, 64]");
      n = static_cast<int>(a);
      continue;
    }
    if (!(ls >> b)) throw ParseError("edge list: expected a vertex pair");
    std::string extra;
    if (ls >> extra) throw ParseError("edge list: unexpected token '" + extra + "'");
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (!n) throw ParseError("edge list: missing vertex count");
  try {
    return Graph::from_edge_list(*n, edges);
  } catch (const std::logic_error& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

enum class InputFormat { kAuto, kGraph6, kEdgeList };

/// One item read from a graph stream: a graph or a parse error, tagged with its first line.
struct StreamItem {
  int line = 0;
  std::variant<Graph, std::string> value;
  bool ok() const { return value.index() == 0; }
  const Graph& graph() const { return std::get<Graph>(value); }
  const std::string& error() const { return std::get<std::string>(value); }
};

/// Reads a stream of graphs. graph6 streams hold one graph per line; edge-list streams hold
/// blocks separated by blank lines. Lines starting with '#' are ignored in both.
class GraphReader {
 public:
  GraphReader(std::istream& in, InputFormat format) : in_(in), format_(format) {}

  std::optional<StreamItem> next() {
    std::string line;
    while (read_line(line)) {
      std::string_view t = trim(line);
      if (t.empty() || t.front() == '#') continue;
      if (format_ == InputFormat::kAuto) format_ = looks_numeric(t) ? InputFormat::kEdgeList : InputFormat::kGraph6;
      if (format_ == InputFormat::kGraph6) return graph6_item(t);
      return edge_block(std::string(t));
    }
    return std::nullopt;
  }

  int line_number() const { return line_no_; }

 private:
  bool read_line(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++line_no_;
    return true;
  }

  static std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  }

  static bool looks_numeric(std::string_view t) {
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c)) && !std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
  }

  StreamItem graph6_item(std::string_view t) {
    StreamItem item{line_no_, std::string()};
    try {
      item.value = parse_graph6(t);
    } catch (const ParseError& e) {
      item.value = std::string(e.what());
    }
    return item;
  }

  StreamItem edge_block(std::string first) {
    StreamItem item{line_no_, std::string()};
    std::string block = first + '\n';
    std::string line;
    while (in_.peek() != std::char_traits<char>::eof() && read_line(line)) {
      if (trim(line).empty()) break;
      block += line;
      block += '\n';
    }
    try {
      item.value = parse_edge_list(block);
    } catch (const ParseError& e) {
      item.value = std::string(e.what());
    }
    return item;
  }

  std::istream& in_;
  InputFormat format_;
  int line_no_ = 0;
};

}  // namespace sumperfect
