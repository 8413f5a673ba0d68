#pragma once

#include "kforce/errors.hpp"
#include "kforce/vertex_set.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace kforce {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept as one neighbor bitset per vertex. Construction rejects
/// self-loops and out-of-range endpoints; repeated edges collapse.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

  Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
      if (u >= n || v >= n)
        throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") out of range for n=" + std::to_string(n));
      if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
      adj_[u].insert(v);
      adj_[v].insert(u);
    }
    for (const auto& row : adj_) m_ += row.count();
    m_ /= 2;
  }

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return m_; }

  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].count(); }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }

  VertexSet vertices() const { return VertexSet::full(order()); }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < order(); ++u)
      for_each_member(adj_[u], [&](Vertex v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& row : adj_) d = std::max(d, row.count());
    return d;
  }

  std::size_t min_degree() const {
    if (adj_.empty()) return 0;
    std::size_t d = order();
    for (const auto& row : adj_) d = std::min(d, row.count());
    return d;
  }

  bool is_regular() const { return max_degree() == min_degree(); }

  /// Vertices reachable from `start` inside `within` (start must be a member).
  VertexSet reach(Vertex start, const VertexSet& within) const {
    VertexSet seen(order());
    seen.insert(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
      VertexSet next(order());
      for_each_member(frontier, [&](Vertex v) { next |= adj_[v]; });
      next &= within;
      next -= seen;
      seen |= next;
      frontier = std::move(next);
    }
    return seen;
  }

  /// Whether the subgraph induced by `s` is connected (true for |s| <= 1).
  bool induces_connected(const VertexSet& s) const {
    if (s.count() <= 1) return true;
    return reach(s.first(), s).count() == s.count();
  }

  bool is_connected() const { return order() <= 1 || induces_connected(vertices()); }

  /// Subgraph induced by `keep`, re-indexed densely in increasing order.
  Graph induced(const VertexSet& keep) const {
    std::vector<Vertex> index(order(), VertexSet::npos);
    std::size_t next = 0;
    for_each_member(keep, [&](Vertex v) { index[v] = next++; });
    std::vector<Edge> es;
    for (auto [u, v] : edges())
      if (keep.contains(u) && keep.contains(v)) es.emplace_back(index[u], index[v]);
    return Graph(next, es);
  }

  Graph remove_vertex(Vertex v) const {
    VertexSet keep = vertices();
    keep.erase(v);
    return induced(keep);
  }

  Graph remove_edge(Vertex u, Vertex v) const {
    const Edge gone{std::min(u, v), std::max(u, v)};
    std::vector<Edge> es;
    for (auto e : edges())
      if (e != gone) es.push_back(e);
    return Graph(order(), es);
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<VertexSet> adj_;
  std::size_t m_ = 0;
};

/// Disjoint union; vertices of `b` follow those of `a`.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> es = a.edges();
  const std::size_t shift = a.order();
  for (auto [u, v] : b.edges()) es.emplace_back(u + shift, v + shift);
  return Graph(a.order() + b.order(), es);
}

/// Connected components ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp = g.reach(unseen.first(), unseen);
    unseen -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

struct DegreeProfile {
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  std::size_t leaves = 0;  // vertices of degree one
  std::map<std::size_t, std::size_t> histogram;

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

inline DegreeProfile degree_profile(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("degree profile of the empty graph");
  DegreeProfile p;
  p.max_degree = g.max_degree();
  p.min_degree = g.min_degree();
  for (Vertex v = 0; v < g.order(); ++v) ++p.histogram[g.degree(v)];
  if (auto it = p.histogram.find(1); it != p.histogram.end()) p.leaves = it->second;
  return p;
}

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && g.is_connected();
}

}  // namespace kforce
