#pragma once

#include "kforce/errors.hpp"
#include "kforce/graph.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace kforce {

enum class Family {
  path,
  cycle,
  complete,
  complete_bipartite,
  star,
  subdivided_star,
  double_leaf_caterpillar,
  cycle_tree,
  circulant,
  pendant_path,
};

inline constexpr std::array<std::pair<Family, std::string_view>, 10> kFamilyNames{{
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::complete, "complete"},
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::star, "star"},
    {Family::subdivided_star, "subdivided_star"},
    {Family::double_leaf_caterpillar, "double_leaf_caterpillar"},
    {Family::cycle_tree, "cycle_tree"},
    {Family::circulant, "circulant"},
    {Family::pendant_path, "pendant_path"},
}};

inline std::string_view family_name(Family f) {
  for (auto [fam, name] : kFamilyNames)
    if (fam == f) return name;
  return "?";
}

inline std::optional<Family> family_from_name(std::string_view name) {
  for (auto [fam, name_] : kFamilyNames)
    if (name_ == name) return fam;
  return std::nullopt;
}

/// A generated family member. Parameters by family:
///   path, cycle, complete, pendant_path, double_leaf_caterpillar: {n or spine}
///   star: {rays}                      complete_bipartite: {p, q}
///   subdivided_star: {rays, s}        each ray edge subdivided s times
///   cycle_tree: {c1, ..., cq}         cycle lengths, chained by bridges
///   circulant: {n, j1, ..., jr}       jumps with 1 <= j <= n/2
struct FamilySpec {
  Family family = Family::path;
  std::vector<std::size_t> params;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline std::string to_string(const FamilySpec& spec) {
  std::ostringstream os;
  os << family_name(spec.family) << '(';
  for (std::size_t i = 0; i < spec.params.size(); ++i) os << (i ? "," : "") << spec.params[i];
  os << ')';
  return os.str();
}

inline void validate(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto fail = [&](const std::string& why) {
    throw PreconditionError("invalid " + to_string(spec) + ": " + why);
  };
  auto arity = [&](std::size_t want) {
    if (p.size() != want) fail("expected " + std::to_string(want) + " parameter(s)");
  };
  switch (spec.family) {
    case Family::path:
    case Family::complete:
    case Family::pendant_path:
    case Family::double_leaf_caterpillar:
    case Family::star:
      arity(1);
      if (p[0] < 1) fail("size must be >= 1");
      break;
    case Family::cycle:
      arity(1);
      if (p[0] < 3) fail("cycle length must be >= 3");
      break;
    case Family::complete_bipartite:
      arity(2);
      if (p[0] < 1 || p[1] < 1) fail("parts must be non-empty");
      break;
    case Family::subdivided_star:
      arity(2);
      if (p[0] < 1) fail("need at least one ray");
      break;
    case Family::cycle_tree:
      if (p.empty()) fail("need at least one cycle");
      if (std::any_of(p.begin(), p.end(), [](std::size_t c) { return c < 3; }))
        fail("each cycle length must be >= 3");
      break;
    case Family::circulant: {
      if (p.size() < 2) fail("need n and at least one jump");
      if (p[0] < 3) fail("circulant order must be >= 3");
      std::vector<std::size_t> jumps(p.begin() + 1, p.end());
      std::sort(jumps.begin(), jumps.end());
      if (std::adjacent_find(jumps.begin(), jumps.end()) != jumps.end()) fail("repeated jump");
      for (auto j : jumps)
        if (j < 1 || 2 * j > p[0]) fail("jumps must lie in 1..n/2");
      break;
    }
  }
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) es.emplace_back(v - 1, v);
  return Graph(n, es);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
  return Graph(n, es);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph(n, es);
}

/// Parts are 0..p-1 and p..p+q-1.
inline Graph complete_bipartite_graph(std::size_t p, std::size_t q) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < p; ++u)
    for (Vertex v = 0; v < q; ++v) es.emplace_back(u, p + v);
  return Graph(p + q, es);
}

inline Graph star_graph(std::size_t rays) { return complete_bipartite_graph(1, rays); }

/// Center 0; each ray is a path of s+1 new vertices numbered outward.
inline Graph subdivided_star_graph(std::size_t rays, std::size_t s) {
  std::vector<Edge> es;
  Vertex next = 1;
  for (std::size_t r = 0; r < rays; ++r) {
    Vertex prev = 0;
    for (std::size_t i = 0; i <= s; ++i) {
      es.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph(next, es);
}

/// Spine 0..s-1; spine vertex i carries leaves s+2i and s+2i+1.
inline Graph double_leaf_caterpillar_graph(std::size_t spine) {
  std::vector<Edge> es;
  for (Vertex v = 1; v < spine; ++v) es.emplace_back(v - 1, v);
  for (Vertex i = 0; i < spine; ++i) {
    es.emplace_back(i, spine + 2 * i);
    es.emplace_back(i, spine + 2 * i + 1);
  }
  return Graph(3 * spine, es);
}

/// Cycles occupy consecutive blocks; vertex 1 of cycle i is joined to
/// vertex 0 of cycle i+1, so the joining edges are bridges and Delta <= 3.
inline Graph cycle_tree_graph(const std::vector<std::size_t>& lengths) {
  std::vector<Edge> es;
  Vertex base = 0;
  for (std::size_t c = 0; c < lengths.size(); ++c) {
    const std::size_t len = lengths[c];
    for (Vertex i = 0; i < len; ++i) es.emplace_back(base + i, base + (i + 1) % len);
    if (c + 1 < lengths.size()) es.emplace_back(base + 1, base + len);
    base += len;
  }
  return Graph(base, es);
}

inline Graph circulant_graph(std::size_t n, const std::vector<std::size_t>& jumps) {
  std::vector<Edge> es;
  for (Vertex v = 0; v < n; ++v)
    for (auto j : jumps) es.emplace_back(v, (v + j) % n);
  return Graph(n, es);
}

/// Path 0..n-1 with leaf n+i hanging from path vertex i.
inline Graph pendant_path_graph(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) es.emplace_back(v - 1, v);
  for (Vertex v = 0; v < n; ++v) es.emplace_back(v, n + v);
  return Graph(2 * n, es);
}

inline Graph generate(const FamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::path: return path_graph(p[0]);
    case Family::cycle: return cycle_graph(p[0]);
    case Family::complete: return complete_graph(p[0]);
    case Family::complete_bipartite: return complete_bipartite_graph(p[0], p[1]);
    case Family::star: return star_graph(p[0]);
    case Family::subdivided_star: return subdivided_star_graph(p[0], p[1]);
    case Family::double_leaf_caterpillar: return double_leaf_caterpillar_graph(p[0]);
    case Family::cycle_tree: return cycle_tree_graph(p);
    case Family::circulant: return circulant_graph(p[0], {p.begin() + 1, p.end()});
    case Family::pendant_path: return pendant_path_graph(p[0]);
  }
  throw PreconditionError("unknown family");
}

/// Expands one sweep argument such as "3..6" or "3,4..5" into every
/// parameter tuple it denotes (cartesian product over ranges, in order).
inline std::vector<std::vector<std::size_t>> expand_parameter_sweep(std::string_view arg) {
  std::vector<std::vector<std::size_t>> out{{}};
  auto parse_num = [&](std::string_view s) -> std::size_t {
    std::size_t value = 0;
    if (s.empty()) throw PreconditionError("empty number in sweep '" + std::string(arg) + "'");
    for (char c : s) {
      if (c < '0' || c > '9') throw PreconditionError("bad number in sweep '" + std::string(arg) + "'");
      value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    return value;
  };
  std::size_t start = 0;
  while (start <= arg.size()) {
    auto comma = arg.find(',', start);
    if (comma == std::string_view::npos) comma = arg.size();
    const std::string_view item = arg.substr(start, comma - start);
    std::size_t lo = 0;
    std::size_t hi = 0;
    if (auto dots = item.find(".."); dots != std::string_view::npos) {
      lo = parse_num(item.substr(0, dots));
      hi = parse_num(item.substr(dots + 2));
      if (hi < lo) throw PreconditionError("empty range in sweep '" + std::string(arg) + "'");
    } else {
      lo = hi = parse_num(item);
    }
    std::vector<std::vector<std::size_t>> grown;
    for (const auto& prefix : out)
      for (std::size_t v = lo; v <= hi; ++v) {
        grown.push_back(prefix);
        grown.back().push_back(v);
      }
    out = std::move(grown);
    start = comma + 1;
  }
  return out;
}

}  // namespace kforce
