#pragma once

// Exact solvers for the invariants that k-forcing numbers are compared
// against. All are exhaustive and meant for graphs of a dozen or so vertices.

#include "kforce/connectivity.hpp"
#include "kforce/errors.hpp"
#include "kforce/graph.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace kforce {

struct SetResult {
  std::size_t value = 0;
  VertexSet witness;
};

inline bool is_k_dominating(const Graph& g, const VertexSet& d, std::size_t k) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (!d.contains(v) && (g.neighbors(v) & d).count() < k) return false;
  return true;
}

/// Smallest D inducing a connected subgraph with every vertex outside D
/// having at least k neighbors in D. None when the graph is disconnected.
inline std::optional<SetResult> connected_k_domination(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  if (n == 0) throw PreconditionError("connected domination of the empty graph");
  if (!g.is_connected()) return std::nullopt;
  for (std::size_t c = 1; c <= n; ++c) {
    std::optional<SetResult> hit;
    for_each_subset_colex(n, c, [&](std::uint64_t mask) {
      VertexSet d = VertexSet::from_mask(n, mask);
      if (!g.induces_connected(d) || !is_k_dominating(g, d, k)) return false;
      hit = SetResult{c, std::move(d)};
      return true;
    });
    if (hit) return hit;
  }
  return std::nullopt;  // unreachable for connected g: D = V qualifies
}

inline bool is_k_independent(const Graph& g, const VertexSet& s, std::size_t k) {
  for (Vertex v = s.first(); v != VertexSet::npos; v = s.next(v))
    if ((g.neighbors(v) & s).count() >= k) return false;
  return true;
}

struct IndependenceResult {
  std::size_t value = 0;
  VertexSet witness;
  std::vector<VertexSet> all_maximum;  // filled only on request
};

/// Largest S whose induced subgraph has maximum degree at most k-1.
inline IndependenceResult k_independence_number(const Graph& g, std::size_t k, bool collect_all_maximum = false) {
  const std::size_t n = g.order();
  if (n == 0) throw PreconditionError("k-independence number of the empty graph");
  if (k == 0) throw PreconditionError("k must be a positive integer");
  IndependenceResult result;
  for (std::size_t c = n; c >= 1; --c) {
    bool found = false;
    for_each_subset_colex(n, c, [&](std::uint64_t mask) {
      VertexSet s = VertexSet::from_mask(n, mask);
      if (!is_k_independent(g, s, k)) return false;
      if (!found) {
        found = true;
        result.value = c;
        result.witness = s;
      }
      if (collect_all_maximum) result.all_maximum.push_back(std::move(s));
      return !collect_all_maximum;
    });
    if (found) return result;
  }
  throw std::logic_error("a single vertex is always k-independent");  // unreachable
}

// ---------------------------------------------------------------------------
// Path cover of trees.
//
// In a tree, any set of edges in which every vertex has degree at most two is
// a disjoint union of induced paths, so P(T) = n - (largest such edge set).

struct PathCover {
  std::size_t value = 0;
  std::vector<std::vector<Vertex>> paths;  // each listed end to end
};

namespace detail {

inline void require_tree(const Graph& t) {
  if (!is_tree(t)) throw PreconditionError("path cover number is defined here for trees only");
}

/// Turns a chosen edge set (max degree two, acyclic) into ordered paths.
inline PathCover paths_from_edges(std::size_t n, const std::vector<Edge>& chosen) {
  std::vector<std::vector<Vertex>> nbr(n);
  for (auto [u, v] : chosen) {
    nbr[u].push_back(v);
    nbr[v].push_back(u);
  }
  PathCover cover;
  std::vector<bool> used(n, false);
  for (Vertex start = 0; start < n; ++start) {
    if (used[start] || nbr[start].size() == 2) continue;
    std::vector<Vertex> path{start};
    used[start] = true;
    Vertex prev = start;
    Vertex cur = start;
    while (true) {
      Vertex step = VertexSet::npos;
      for (Vertex w : nbr[cur])
        if (w != prev && !used[w]) step = w;
      if (step == VertexSet::npos) break;
      used[step] = true;
      path.push_back(step);
      prev = cur;
      cur = step;
    }
    cover.paths.push_back(std::move(path));
  }
  cover.value = cover.paths.size();
  return cover;
}

}  // namespace detail

inline constexpr std::size_t kPathCoverBruteForceMaxN = 10;

/// Exhaustive over edge subsets; trees with at most 10 vertices.
inline PathCover path_cover_brute_force(const Graph& t) {
  detail::require_tree(t);
  if (t.order() > kPathCoverBruteForceMaxN) throw ScopeError("brute-force path cover is limited to n <= 10");
  const auto edges = t.edges();
  const std::size_t m = edges.size();
  std::uint64_t best_mask = 0;
  std::size_t best_size = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size <= best_size && mask != 0) continue;
    std::vector<int> deg(t.order(), 0);
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i)
      if ((mask >> i) & 1U) ok = ++deg[edges[i].first] <= 2 && ++deg[edges[i].second] <= 2;
    if (ok && (size > best_size || mask == 0)) {
      best_size = size;
      best_mask = mask;
    }
  }
  std::vector<Edge> chosen;
  for (std::size_t i = 0; i < m; ++i)
    if ((best_mask >> i) & 1U) chosen.push_back(edges[i]);
  return detail::paths_from_edges(t.order(), chosen);
}

/// Bottom-up dynamic program: best[v][j] is the largest edge set inside the
/// subtree of v (degree <= 2 everywhere) using exactly j edges from v down.
inline PathCover path_cover_dp(const Graph& t) {
  detail::require_tree(t);
  const std::size_t n = t.order();
  constexpr long kNone = -1;
  std::vector<Vertex> parent(n, VertexSet::npos);
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for_each_member(t.neighbors(v), [&](Vertex w) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = v;
        stack.push_back(w);
      }
    });
  }

  std::vector<std::array<long, 3>> best(n, {kNone, kNone, kNone});
  // Children linked to v in the optimum for best[v][j].
  std::vector<std::array<std::vector<Vertex>, 3>> linked(n);
  auto free_value = [&](Vertex c) { return std::max({best[c][0], best[c][1], best[c][2]}); };
  auto link_value = [&](Vertex c) { return std::max(best[c][0], best[c][1]) + 1; };

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    std::vector<Vertex> kids;
    for_each_member(t.neighbors(v), [&](Vertex w) {
      if (w != parent[v]) kids.push_back(w);
    });
    long base = 0;
    for (Vertex c : kids) base += free_value(c);
    std::stable_sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) {
      return link_value(a) - free_value(a) > link_value(b) - free_value(b);
    });
    long acc = base;
    best[v][0] = base;
    for (std::size_t j = 1; j <= 2 && j <= kids.size(); ++j) {
      acc += link_value(kids[j - 1]) - free_value(kids[j - 1]);
      best[v][j] = acc;
      linked[v][j].assign(kids.begin(), kids.begin() + static_cast<long>(j));
    }
  }

  // Reconstruct: choose v's state, linked children are capped at state <= 1.
  std::vector<Edge> chosen;
  std::vector<int> cap(n, 2);
  for (Vertex v : order) {
    int state = 0;
    for (int j = 1; j <= cap[v]; ++j)
      if (best[v][j] > best[v][state]) state = j;
    for (Vertex c : linked[v][state]) {
      chosen.emplace_back(std::min(v, c), std::max(v, c));
      cap[c] = 1;
    }
  }
  return detail::paths_from_edges(n, chosen);
}

inline PathCover path_cover_number(const Graph& t) {
  return t.order() <= kPathCoverBruteForceMaxN ? path_cover_brute_force(t) : path_cover_dp(t);
}

// ---------------------------------------------------------------------------
// Maximum-leaf spanning tree.

inline constexpr std::size_t kMaxLeafMaxN = 10;

namespace detail {

struct LeafSearch {
  const std::vector<Edge>& edges;
  std::size_t n;
  std::size_t best = 0;

  std::size_t find(std::vector<Vertex>& uf, Vertex v) const {
    while (uf[v] != v) v = uf[v];
    return v;
  }

  void run(std::size_t next, std::size_t used, std::vector<Vertex> uf, std::vector<int> deg) {
    if (best + 1 == n) return;  // a star; nothing beats n-1 leaves
    if (used + 1 == n) {
      const auto leaves = static_cast<std::size_t>(std::count(deg.begin(), deg.end(), 1));
      best = std::max(best, leaves);
      return;
    }
    if (next == edges.size() || edges.size() - next < n - 1 - used) return;
    const auto potential = static_cast<std::size_t>(std::count_if(deg.begin(), deg.end(), [](int d) { return d <= 1; }));
    if (potential <= best) return;

    const auto [u, v] = edges[next];
    const Vertex ru = find(uf, u);
    const Vertex rv = find(uf, v);
    if (ru != rv) {
      auto uf2 = uf;
      auto deg2 = deg;
      uf2[ru] = rv;
      ++deg2[u];
      ++deg2[v];
      run(next + 1, used + 1, std::move(uf2), std::move(deg2));
    }
    run(next + 1, used, std::move(uf), std::move(deg));
  }
};

}  // namespace detail

/// Largest leaf count over all spanning trees, by exhaustive enumeration with
/// leaf-count pruning. Connected graphs with 3 <= n <= 10.
inline std::size_t max_leaf_spanning_tree(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) throw PreconditionError("max-leaf spanning tree needs n >= 3");
  if (!g.is_connected()) throw PreconditionError("max-leaf spanning tree needs a connected graph");
  if (n > kMaxLeafMaxN) throw ScopeError("max-leaf spanning tree enumeration is limited to n <= 10");

  // Edges at high-degree vertices first, so star-like trees are met early.
  std::vector<Vertex> rank(n);
  std::iota(rank.begin(), rank.end(), Vertex{0});
  std::stable_sort(rank.begin(), rank.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[rank[i]] = i;
  auto edges = g.edges();
  std::stable_sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) {
    auto key = [&](const Edge& e) {
      return std::pair{std::min(pos[e.first], pos[e.second]), std::max(pos[e.first], pos[e.second])};
    };
    return key(a) < key(b);
  });

  detail::LeafSearch search{edges, n};
  std::vector<Vertex> uf(n);
  std::iota(uf.begin(), uf.end(), Vertex{0});
  search.run(0, 0, std::move(uf), std::vector<int>(n, 0));
  return search.best;
}

// ---------------------------------------------------------------------------
// Hamiltonian cycles.

namespace detail {

inline bool extend_hamiltonian(const Graph& g, std::vector<Vertex>& path, VertexSet& visited) {
  if (path.size() == g.order()) return g.adjacent(path.back(), path.front());
  const VertexSet& nb = g.neighbors(path.back());
  for (Vertex w = nb.first(); w != VertexSet::npos; w = nb.next(w)) {
    if (visited.contains(w)) continue;
    path.push_back(w);
    visited.insert(w);
    if (extend_hamiltonian(g, path, visited)) return true;
    visited.erase(w);
    path.pop_back();
  }
  return false;
}

}  // namespace detail

/// Backtracking from vertex 0, neighbors in index order. Returns the cycle as
/// a vertex sequence (closing edge implied) or none.
inline std::optional<std::vector<Vertex>> hamiltonian_cycle(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) throw PreconditionError("Hamiltonian cycle search needs n >= 3");
  if (g.min_degree() < 2) return std::nullopt;
  std::vector<Vertex> path{0};
  VertexSet visited(n, {0});
  if (detail::extend_hamiltonian(g, path, visited)) return path;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Induced stars.

/// True iff no vertex has r pairwise non-adjacent neighbors.
inline bool is_k1r_free(const Graph& g, std::size_t r) {
  if (r < 3) throw PreconditionError("K_{1,r}-freeness is checked for r >= 3");
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto nb = g.neighbors(v).members();
    if (nb.size() < r) continue;
    const Graph local = g.induced(g.neighbors(v));
    const bool star = for_each_subset_colex(local.order(), r, [&](std::uint64_t mask) {
      return is_k_independent(local, VertexSet::from_mask(local.order(), mask), 1);
    });
    if (star) return false;
  }
  return true;
}

/// Smallest r >= 3 for which the graph is K_{1,r}-free.
inline std::size_t min_free_star(const Graph& g) {
  std::size_t r = 3;
  while (!is_k1r_free(g, r)) ++r;
  return r;
}

// ---------------------------------------------------------------------------
// Cycle-trees.

struct CycleTreeResult {
  bool is_cycle_tree = false;
  std::size_t cycles = 0;  // q = m - n + 1 when is_cycle_tree
};

inline std::vector<Edge> bridges(const Graph& g) {
  const std::size_t base = components(g).size();
  std::vector<Edge> out;
  for (auto [u, v] : g.edges())
    if (components(g.remove_edge(u, v)).size() > base) out.emplace_back(u, v);
  return out;
}

/// Connected, and removing all bridges leaves vertex-disjoint cycles covering V.
inline CycleTreeResult is_cycle_tree(const Graph& g) {
  if (g.order() < 3 || !g.is_connected()) return {};
  const auto cut = bridges(g);
  std::vector<Edge> rest;
  for (auto e : g.edges())
    if (std::find(cut.begin(), cut.end(), e) == cut.end()) rest.push_back(e);
  const Graph core(g.order(), rest);
  for (const auto& comp : components(core)) {
    if (comp.count() < 3) return {};
    bool two_regular = true;
    for_each_member(comp, [&](Vertex v) { two_regular = two_regular && core.degree(v) == 2; });
    if (!two_regular) return {};
  }
  return {true, g.size() - g.order() + 1};
}

}  // namespace kforce
