#pragma once

// Independent brute-force oracles. They share nothing with the library's
// solvers beyond reading adjacency: plain vectors, full enumeration over all
// subsets or permutations, and the asynchronous one-forcer-at-a-time rule.

#include "kforce/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace kforce::oracle {

using Adj = std::vector<std::vector<int>>;

inline Adj adjacency(const Graph& g) {
  Adj a(g.order());
  for (auto [u, v] : g.edges()) {
    a[u].push_back(static_cast<int>(v));
    a[v].push_back(static_cast<int>(u));
  }
  for (auto& row : a) std::sort(row.begin(), row.end());
  return a;
}

inline std::vector<bool> bits(std::size_t n, std::uint64_t mask) {
  std::vector<bool> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (mask >> i) & 1U;
  return out;
}

/// Fires one eligible forcer at a time, always the smallest index.
inline std::vector<bool> async_closure(const Adj& a, std::vector<bool> colored, std::size_t k) {
  while (true) {
    bool fired = false;
    for (std::size_t v = 0; v < a.size() && !fired; ++v) {
      if (!colored[v]) continue;
      std::size_t open = 0;
      for (int w : a[v]) open += !colored[w];
      if (open >= 1 && open <= k) {
        for (int w : a[v]) colored[w] = true;
        fired = true;
      }
    }
    if (!fired) return colored;
  }
}

inline bool all_true(const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); }

inline std::size_t popcount(std::uint64_t m) { return static_cast<std::size_t>(__builtin_popcountll(m)); }

/// min |S| over all 2^n subsets S that force the graph.
inline std::size_t forcing_number(const Graph& g, std::size_t k) {
  const Adj a = adjacency(g);
  const std::size_t n = g.order();
  std::size_t best = n;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    if (popcount(m) < best && all_true(async_closure(a, bits(n, m), k))) best = popcount(m);
  return best;
}

/// Every minimum forcing set as a mask.
inline std::vector<std::uint64_t> minimum_forcing_sets(const Graph& g, std::size_t k) {
  const Adj a = adjacency(g);
  const std::size_t n = g.order();
  const std::size_t best = forcing_number(g, k);
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    if (popcount(m) == best && all_true(async_closure(a, bits(n, m), k))) out.push_back(m);
  return out;
}

inline bool connected_within(const Adj& a, const std::vector<bool>& in) {
  const auto n = a.size();
  int start = -1;
  std::size_t total = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (in[v]) {
      ++total;
      if (start < 0) start = static_cast<int>(v);
    }
  if (total <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{start};
  seen[start] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : a[v])
      if (in[w] && !seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == total;
}

inline std::optional<std::size_t> connected_k_domination(const Graph& g, std::size_t k) {
  const Adj a = adjacency(g);
  const std::size_t n = g.order();
  std::optional<std::size_t> best;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    const auto in = bits(n, m);
    if (!connected_within(a, in)) continue;
    bool dom = true;
    for (std::size_t v = 0; v < n && dom; ++v) {
      if (in[v]) continue;
      std::size_t c = 0;
      for (int w : a[v]) c += in[w];
      dom = c >= k;
    }
    if (dom && (!best || popcount(m) < *best)) best = popcount(m);
  }
  return best;
}

inline std::size_t k_independence(const Graph& g, std::size_t k) {
  const Adj a = adjacency(g);
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const auto in = bits(n, m);
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      if (!in[v]) continue;
      std::size_t c = 0;
      for (int w : a[v]) c += in[w];
      ok = c < k;
    }
    if (ok) best = std::max(best, popcount(m));
  }
  return best;
}

inline bool k_connected(const Graph& g, std::size_t k) {
  const Adj a = adjacency(g);
  const std::size_t n = g.order();
  if (n <= k) return false;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (popcount(m) >= k) continue;
    auto keep = bits(n, m);
    keep.flip();
    if (!connected_within(a, keep)) return false;
  }
  return true;
}

/// Max leaves over all (n-1)-edge subsets that form a spanning tree.
inline std::size_t max_leaf(const Graph& g) {
  const auto edges = g.edges();
  const std::size_t n = g.order();
  const std::size_t m = edges.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (popcount(mask) != n - 1) continue;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    std::vector<std::size_t> deg(n, 0);
    bool acyclic = true;
    for (std::size_t i = 0; i < m && acyclic; ++i) {
      if (!((mask >> i) & 1U)) continue;
      const auto ru = find(edges[i].first);
      const auto rv = find(edges[i].second);
      if (ru == rv) acyclic = false;
      parent[ru] = rv;
      ++deg[edges[i].first];
      ++deg[edges[i].second];
    }
    if (acyclic) best = std::max(best, static_cast<std::size_t>(std::count(deg.begin(), deg.end(), 1)));
  }
  return best;
}

/// Hamiltonicity by trying every cyclic order that starts at vertex 0.
inline bool hamiltonian(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool ok = g.adjacent(0, perm.front()) && g.adjacent(perm.back(), 0);
    for (std::size_t i = 0; i + 1 < perm.size() && ok; ++i) ok = g.adjacent(perm[i], perm[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Minimum number of blocks in a partition of V where each block induces a
/// path, by exhaustive set-partition search.
inline std::size_t path_partition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> block(n, -1);
  std::size_t best = n;
  auto induces_path = [&](const std::vector<std::size_t>& vs) {
    std::size_t edges = 0;
    for (auto u : vs) {
      std::size_t d = 0;
      for (auto v : vs) d += g.adjacent(u, v);
      if (d > 2) return false;
      edges += d;
    }
    edges /= 2;
    if (edges + 1 != vs.size()) return false;
    VertexSet s(n, vs);
    return g.induces_connected(s);
  };
  auto rec = [&](auto&& self, std::size_t v, std::size_t used) -> void {
    if (used >= best) return;
    if (v == n) {
      for (std::size_t b = 0; b < used; ++b) {
        std::vector<std::size_t> vs;
        for (std::size_t u = 0; u < n; ++u)
          if (block[u] == static_cast<int>(b)) vs.push_back(u);
        if (!induces_path(vs)) return;
      }
      best = used;
      return;
    }
    for (std::size_t b = 0; b <= used; ++b) {
      block[v] = static_cast<int>(b);
      self(self, v + 1, std::max(used, b + 1));
    }
    block[v] = -1;
  };
  rec(rec, 0, 0);
  return best;
}

}  // namespace kforce::oracle
