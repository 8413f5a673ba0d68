#pragma once

// graph6 and edge-list serialization.
//
// graph6 (as used by nauty): N(n) followed by the upper triangle of the
// adjacency matrix, column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...),
// packed six bits per byte, each byte offset by 63. N(n) is one byte for
// n <= 62, '~' plus three bytes for n <= 258047, and "~~" plus six bytes
// beyond that.

#include "kforce/errors.hpp"
#include "kforce/graph.hpp"

#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace kforce {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline int graph6_value(char c) {
  const int v = static_cast<unsigned char>(c);
  if (v < 63 || v > 126)
    throw ParseError(std::string("graph6: character outside 63..126: code ") + std::to_string(v));
  return v - 63;
}

}  // namespace detail

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

inline Graph parse_graph6(std::string_view text) {
  text = detail::trim(text);
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  if (text.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  auto take = [&]() -> int {
    if (pos >= text.size()) throw ParseError("graph6: truncated length header");
    return detail::graph6_value(text[pos++]);
  };

  std::uint64_t n = 0;
  int first = take();
  if (first < 63) {
    n = static_cast<std::uint64_t>(first);
  } else {
    int second = take();
    int groups = 3;
    if (second == 63) {
      groups = 6;
      second = take();
    }
    n = static_cast<std::uint64_t>(second);
    for (int i = 1; i < groups; ++i) n = (n << 6) | static_cast<std::uint64_t>(take());
    const bool canonical = groups == 3 ? n >= 63 : n > 258047;
    if (!canonical) throw ParseError("graph6: non-canonical length header");
  }

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw ParseError("graph6: expected " + std::to_string(bytes) + " adjacency bytes, found " +
                     std::to_string(text.size() - pos));

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      const int byte = detail::graph6_value(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (; k < bytes * 6; ++k) {
    const int byte = detail::graph6_value(text[pos + k / 6]);
    if ((byte >> (5 - k % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
  }
  // Also validates characters when n <= 1 (no adjacency bytes).
  for (std::size_t i = pos; i < text.size(); ++i) detail::graph6_value(text[i]);
  return Graph(static_cast<std::size_t>(n), edges);
}

inline std::string write_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

/// Reads one graph6 string per non-blank line.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::trim(line).empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

/// Edge-list text: one "u v" pair per line, '#' starts a comment. A line
/// holding a single integer declares the vertex count, which lets isolated
/// trailing vertices exist; otherwise n is one past the largest endpoint.
inline Graph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::optional<std::size_t> declared;
  std::size_t n = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (detail::trim(line).empty()) continue;
    std::istringstream fields(line);
    std::vector<long long> values;
    std::string tok;
    while (fields >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || v < 0)
        throw ParseError("edge list line " + std::to_string(lineno) + ": bad token '" + tok + "'");
      values.push_back(v);
    }
    if (values.size() == 1) {
      if (declared || !edges.empty())
        throw ParseError("edge list line " + std::to_string(lineno) +
                         ": vertex count must precede edges and appear once");
      declared = static_cast<std::size_t>(values[0]);
    } else if (values.size() == 2) {
      const auto u = static_cast<Vertex>(values[0]);
      const auto v = static_cast<Vertex>(values[1]);
      if (u == v) throw ParseError("edge list line " + std::to_string(lineno) + ": self-loop");
      if (declared && (u >= *declared || v >= *declared))
        throw ParseError("edge list line " + std::to_string(lineno) + ": vertex exceeds declared count");
      edges.emplace_back(u, v);
      n = std::max({n, u + 1, v + 1});
    } else {
      throw ParseError("edge list line " + std::to_string(lineno) + ": expected \"u v\"");
    }
  }
  return Graph(declared.value_or(n), edges);
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

inline std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace kforce
